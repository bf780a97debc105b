import { describe, expect, it } from "vitest";

import {
  ERROR_CLASSES,
  EmptyDocumentError,
  IncompatibleSchemeError,
  MalformedTripleError,
  MrSyntaxError,
  NoHighlightsError,
  SchemaError,
  UnbalancedTagError,
  UnexpectedTokenError,
  UsageError,
  VirtabError,
  convertBatch,
  convertRecord,
  parseUnified,
  parseUnifiedBatch,
  type InputRecord,
} from "../src/index.js";
import {
  CORE_ERROR_CODES,
  E2E_CONCAT,
  FILMOGRAPHY_RECORD,
  HIGHLIGHTED,
  UNIFIEDSKG_KG,
} from "./golden.js";

const WASMUND: InputRecord = {
  id: "k1",
  form: "kg",
  payload: {
    triples: [
      ["William Wasmund", "FIELD_GOALS", "0"],
      ["William Wasmund", "EXTRA_POINTS", "0"],
    ],
  },
};

const COCUM: InputRecord = {
  id: "m1",
  form: "mr",
  payload: { text: E2E_CONCAT },
};

describe("convert", () => {
  it("reproduces the highlighted golden string", () => {
    const outputs = convertRecord(FILMOGRAPHY_RECORD, "unified", "highlighted");
    expect(outputs).toHaveLength(1);
    expect(outputs[0].text).toBe(HIGHLIGHTED);
    expect(outputs[0].scheme).toBe("unified");
    expect(outputs[0].orientation).toBe("highlighted");
    expect(outputs[0].warnings).toEqual([]);
  });

  it("reproduces the triple-concatenation and MR golden strings", () => {
    expect(convertRecord(WASMUND, "unifiedskg")[0].text).toBe(UNIFIEDSKG_KG);
    expect(convertRecord(COCUM, "e2e-concat")[0].text).toBe(E2E_CONCAT);
  });

  it("groups one output list per input record, kg components suffixed", () => {
    const disjoint: InputRecord = {
      id: "k2",
      form: "kg",
      payload: { triples: [["A", "r", "B"], ["C", "s", "D"]] },
      meta: { split: "dev" },
    };
    const grouped = convertBatch([FILMOGRAPHY_RECORD, disjoint, COCUM], "unified", "row");
    expect(grouped).toHaveLength(3);
    expect(grouped[0].map((o) => o.id)).toEqual(["t1"]);
    expect(grouped[1].map((o) => o.id)).toEqual(["k2#1", "k2#2"]);
    expect(grouped[1][0].meta).toEqual({ split: "dev" });
    expect(grouped[2].map((o) => o.id)).toEqual(["m1"]);
  });

  it("returns an empty list for an empty batch", () => {
    expect(convertBatch([], "unified", "row")).toEqual([]);
  });
});

describe("error taxonomy", () => {
  it("maps every core code to a distinct class", () => {
    for (const code of CORE_ERROR_CODES) {
      const ctor = ERROR_CLASSES[code];
      expect(ctor, `missing class for ${code}`).toBeDefined();
      const err = new ctor("x");
      expect(err).toBeInstanceOf(VirtabError);
      expect(err.code).toBe(code);
    }
    const classes = new Set(CORE_ERROR_CODES.map((code) => ERROR_CLASSES[code]));
    expect(classes.size).toBe(CORE_ERROR_CODES.length);
  });

  it("raises MrSyntaxError for malformed MRs", () => {
    const bad: InputRecord = { id: "m", form: "mr", payload: { text: "name[oops" } };
    expect(() => convertRecord(bad, "e2e-concat")).toThrowError(MrSyntaxError);
    try {
      convertRecord(bad, "e2e-concat");
    } catch (err) {
      expect((err as VirtabError).details.id).toBe("m");
    }
  });

  it("raises MalformedTriple with the record id", () => {
    const bad: InputRecord = { id: "k", form: "kg", payload: { triples: [["a", "r"]] as never } };
    expect(() => convertRecord(bad, "unifiedskg")).toThrowError(MalformedTripleError);
  });

  it("raises NoHighlights for a table without highlights", () => {
    const bare: InputRecord = {
      id: "t",
      form: "table",
      payload: { rows: [[{ value: "x" }]] },
    };
    expect(() => convertRecord(bare, "unified", "highlighted")).toThrowError(NoHighlightsError);
  });

  it("raises IncompatibleScheme when the form can never apply", () => {
    expect(() => convertRecord(WASMUND, "unified", "column")).toThrowError(
      IncompatibleSchemeError,
    );
    expect(() => convertRecord(COCUM, "totto")).toThrowError(IncompatibleSchemeError);
  });

  it("raises SchemaError for malformed records", () => {
    const bad = { id: "", form: "mr", payload: { text: "a[b]" } } as InputRecord;
    expect(() => convertRecord(bad, "e2e-concat")).toThrowError(SchemaError);
  });

  it("raises UsageError when the invocation itself is wrong", () => {
    expect(() => convertRecord(COCUM, "unified")).toThrowError(UsageError);
  });
});

describe("parseUnified", () => {
  it("parses the golden highlighted string into a table structure", () => {
    const doc = parseUnified(HIGHLIGHTED);
    expect(doc.orientation).toBe("highlighted");
    expect(doc.table.title).toBe("Alma Jodorowsky");
    expect(doc.table.sub_title).toBe("Filmography");
    expect(doc.table.rows[0]).toEqual([
      { value: "2016", col_headers: ["Year"], row_headers: [] },
      { value: "Kids in Love", col_headers: ["Title"], row_headers: [] },
      { value: "Evelyn", col_headers: ["Role"], row_headers: [] },
    ]);
    expect(doc.table.highlights).toEqual([[0, 0], [0, 1], [0, 2]]);
  });

  it("round-trips converter output", () => {
    const outputs = convertBatch([FILMOGRAPHY_RECORD, WASMUND, COCUM], "unified", "row");
    const docs = parseUnifiedBatch(outputs.flat().map((o) => o.text));
    expect(docs).toHaveLength(3);
    expect(docs.every((d) => d.orientation === "row")).toBe(true);
    expect(docs[1].table.rows[0][0]).toEqual({
      value: "William Wasmund",
      col_headers: [],
      row_headers: [],
    });
  });

  it("maps parse failures to typed errors with token offsets", () => {
    expect(() => parseUnified("")).toThrowError(EmptyDocumentError);
    expect(() => parseUnified("<table> <cell> x </table>")).toThrowError(UnbalancedTagError);
    try {
      parseUnified("<table> <row> </row> </table>");
      expect.unreachable("should have thrown");
    } catch (err) {
      expect(err).toBeInstanceOf(UnexpectedTokenError);
      expect((err as VirtabError).details.offset).toBe(2);
    }
  });
});

// CLI-vs-binding diff oracle: binding outputs must be byte-identical to what
// the CLI writes for the same records and options. The CLI side here spawns
// the core directly, independently of the binding's runner.

import { spawnSync } from "node:child_process";
import { mkdtempSync, readFileSync, rmSync, writeFileSync } from "node:fs";
import { tmpdir } from "node:os";
import { dirname, join } from "node:path";
import { fileURLToPath } from "node:url";

import { describe, expect, it } from "vitest";

import {
  convertBatch,
  parseUnifiedBatch,
  type Form,
  type InputRecord,
  type Orientation,
  type Scheme,
} from "../src/index.js";

const HERE = dirname(fileURLToPath(import.meta.url));
const CORPUS = join(HERE, "fixtures", "corpus50.jsonl");
const PYTHON = process.env.VIRTAB_PYTHON ?? "python3";

const RECORDS: InputRecord[] = readFileSync(CORPUS, "utf8")
  .split("\n")
  .filter((line) => line.trim() !== "")
  .map((line) => JSON.parse(line) as InputRecord);

interface Pair {
  scheme: Scheme;
  orientation?: Orientation;
  forms: Form[];
}

const PAIRS: Pair[] = [
  { scheme: "unified", orientation: "highlighted", forms: ["table"] },
  { scheme: "unified", orientation: "row", forms: ["table", "kg", "mr"] },
  { scheme: "unified", orientation: "column", forms: ["table", "mr"] },
  { scheme: "totto", forms: ["table"] },
  { scheme: "unifiedskg", forms: ["kg"] },
  { scheme: "logicnlg", forms: ["table"] },
  { scheme: "e2e-concat", forms: ["mr"] },
];

function cliConvert(records: InputRecord[], scheme: Scheme, orientation?: Orientation): string[] {
  const workdir = mkdtempSync(join(tmpdir(), "virtab-cli-oracle-"));
  try {
    const inPath = join(workdir, "in.jsonl");
    const outPath = join(workdir, "out.jsonl");
    writeFileSync(inPath, records.map((r) => JSON.stringify(r) + "\n").join(""), "utf8");
    const args = ["-m", "virtab", "convert", "--in", inPath, "--out", outPath, "--scheme", scheme];
    if (orientation) args.push("--orientation", orientation);
    const proc = spawnSync(PYTHON, args, { encoding: "utf8", maxBuffer: 64 * 1024 * 1024 });
    expect(proc.status, proc.stderr).toBe(0);
    return readFileSync(outPath, "utf8").split("\n").filter((line) => line.trim() !== "");
  } finally {
    rmSync(workdir, { recursive: true, force: true });
  }
}

describe("binding/CLI parity over the 50-record corpus", () => {
  it("covers all three forms", () => {
    expect(RECORDS).toHaveLength(50);
    expect(new Set(RECORDS.map((r) => r.form))).toEqual(new Set(["table", "kg", "mr"]));
  });

  it.each(PAIRS)("$scheme/$orientation output is byte-identical", (pair) => {
    const subset = RECORDS.filter((r) => pair.forms.includes(r.form));
    expect(subset.length).toBeGreaterThan(0);

    const cliLines = cliConvert(subset, pair.scheme, pair.orientation);
    const bindingOutputs = convertBatch(subset, pair.scheme, pair.orientation).flat();

    expect(bindingOutputs.length).toBe(cliLines.length);
    cliLines.forEach((line, i) => {
      const cliOutput = JSON.parse(line);
      expect(bindingOutputs[i]).toEqual(cliOutput);
      expect(bindingOutputs[i].text).toBe(cliOutput.text); // byte-exact payload
    });
  });

  it("parse structures agree with the CLI parse subcommand", () => {
    const texts = cliConvert(RECORDS, "unified", "row").map(
      (line) => JSON.parse(line).text as string,
    );
    const docs = parseUnifiedBatch(texts);
    expect(docs).toHaveLength(texts.length);

    const workdir = mkdtempSync(join(tmpdir(), "virtab-parse-oracle-"));
    try {
      const inPath = join(workdir, "texts.jsonl");
      const outPath = join(workdir, "parsed.jsonl");
      writeFileSync(
        inPath,
        texts.map((text, i) => JSON.stringify({ id: String(i), text }) + "\n").join(""),
        "utf8",
      );
      const proc = spawnSync(
        PYTHON,
        ["-m", "virtab", "parse", "--in", inPath, "--out", outPath],
        { encoding: "utf8", maxBuffer: 64 * 1024 * 1024 },
      );
      expect(proc.status, proc.stderr).toBe(0);
      const cliDocs = readFileSync(outPath, "utf8")
        .split("\n")
        .filter((line) => line.trim() !== "")
        .map((line) => JSON.parse(line));
      cliDocs.forEach((cliDoc, i) => {
        expect(docs[i].orientation).toBe(cliDoc.orientation);
        expect(docs[i].table).toEqual(cliDoc.table);
      });
    } finally {
      rmSync(workdir, { recursive: true, force: true });
    }
  });
});

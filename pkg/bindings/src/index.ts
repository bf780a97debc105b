// Batch bindings to the structured-data linearization core. One core
// process is spawned per batch call (never per record); outputs are the
// core CLI's own JSONL lines, parsed, so text is byte-identical to CLI use.

import { VirtabError, errorFromEntry } from "./errors.js";
import { runCore } from "./runner.js";
import type {
  BindingOptions,
  InputRecord,
  Orientation,
  OutputRecord,
  ParsedDocument,
  Scheme,
} from "./types.js";

export * from "./errors.js";
export * from "./types.js";

function belongsTo(outputId: string, recordId: string): boolean {
  return outputId === recordId || outputId.startsWith(recordId + "#");
}

/**
 * Convert a batch of records under one scheme; one output list per record.
 *
 * Exact core `convert` semantics per record: a kg record under the unified
 * scheme yields one output per connected component (ids suffixed "#k"),
 * everything else yields exactly one. Any record that fails — including a
 * form the scheme can never apply to — raises the mapped error class.
 */
export function convertBatch(
  records: InputRecord[],
  scheme: Scheme,
  orientation?: Orientation,
  options?: BindingOptions,
): OutputRecord[][] {
  if (records.length === 0) return [];
  const extraArgs = ["--scheme", scheme];
  if (orientation) extraArgs.push("--orientation", orientation);

  const { outputLines } = runCore(
    "convert",
    records.map((record) => JSON.stringify(record)),
    extraArgs,
    options,
    true,
  );

  const grouped: OutputRecord[][] = records.map(() => []);
  let at = 0;
  for (const line of outputLines) {
    const output = JSON.parse(line) as OutputRecord;
    while (at < records.length && !belongsTo(output.id, records[at].id)) {
      at += 1;
    }
    if (at === records.length) {
      throw new VirtabError("SchemaError", `output id ${output.id} matches no input record`);
    }
    grouped[at].push(output);
  }
  return grouped;
}

/** Convert one record; see {@link convertBatch}. */
export function convertRecord(
  record: InputRecord,
  scheme: Scheme,
  orientation?: Orientation,
  options?: BindingOptions,
): OutputRecord[] {
  return convertBatch([record], scheme, orientation, options)[0];
}

interface ParseLine {
  id: string;
  ok: boolean;
  orientation?: string;
  table?: ParsedDocument["table"];
  code?: string;
  message?: string;
  offset?: number;
}

/**
 * Parse a batch of unified-format strings back into table structures.
 *
 * The first malformed string raises its mapped error (UnbalancedTag,
 * UnexpectedToken, EmptyDocument) with the token offset in `details`.
 */
export function parseUnifiedBatch(
  texts: string[],
  options?: BindingOptions,
): ParsedDocument[] {
  if (texts.length === 0) return [];
  const lines = texts.map((text, i) => JSON.stringify({ id: String(i), text }));
  const { outputLines } = runCore("parse", lines, [], options, true);

  return outputLines.map((line) => {
    const parsed = JSON.parse(line) as ParseLine;
    if (!parsed.ok) {
      throw errorFromEntry({ ...parsed, id: parsed.id });
    }
    return {
      orientation: parsed.orientation as ParsedDocument["orientation"],
      table: parsed.table!,
    };
  });
}

/** Parse one unified-format string; see {@link parseUnifiedBatch}. */
export function parseUnified(text: string, options?: BindingOptions): ParsedDocument {
  return parseUnifiedBatch([text], options)[0];
}

// Wire types mirror the core's JSONL schema verbatim (snake_case field
// names included) so binding output stays byte-faithful to CLI output.

export type Form = "table" | "kg" | "mr";

/** Scheme flags exactly as the CLI spells them. */
export type Scheme = "unified" | "totto" | "unifiedskg" | "logicnlg" | "e2e-concat";

export type Orientation = "highlighted" | "row" | "column";

export interface CellPayload {
  value: string;
  col_headers?: string[];
  row_headers?: string[];
}

export interface TablePayload {
  title?: string | null;
  sub_title?: string | null;
  /** A bare string is shorthand for a header-less cell. */
  rows: Array<Array<CellPayload | string>>;
  highlights?: Array<[number, number]>;
}

export interface KgPayload {
  triples: Array<[string, string, string]>;
}

export interface MrPayload {
  text: string;
}

export interface InputRecord {
  /** Unique within a batch; must not contain "#" (reserved for kg suffixes). */
  id: string;
  form: Form;
  payload: TablePayload | KgPayload | MrPayload;
  meta?: Record<string, unknown>;
}

export interface OutputRecord {
  id: string;
  scheme: string;
  orientation: string;
  text: string;
  warnings: string[];
  meta?: Record<string, unknown>;
}

export interface ParsedCell {
  value: string;
  col_headers: string[];
  row_headers: string[];
}

export interface ParsedTable {
  title: string | null;
  sub_title: string | null;
  rows: ParsedCell[][];
  highlights: Array<[number, number]>;
}

export interface ParsedDocument {
  orientation: Orientation;
  table: ParsedTable;
}

export interface BindingOptions {
  /**
   * Command used to reach the core, e.g. ["python3", "-m", "virtab"].
   * Defaults to $VIRTAB_PYTHON (a single executable) or "python3".
   */
  command?: string[];
}

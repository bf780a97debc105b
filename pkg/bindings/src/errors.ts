// One error class per core error code, mapped 1:1 so pipelines can catch
// precisely. The `code` field always carries the core's spelling.

export interface ErrorDetails {
  id?: string;
  line?: number;
  offset?: number;
  field?: string;
}

export class VirtabError extends Error {
  readonly code: string;
  readonly details: ErrorDetails;

  constructor(code: string, message: string, details: ErrorDetails = {}) {
    super(message);
    this.name = code;
    this.code = code;
    this.details = details;
  }
}

function subclass(code: string) {
  return class extends VirtabError {
    constructor(message: string, details: ErrorDetails = {}) {
      super(code, message, details);
    }
  };
}

export const EmptyTableError = subclass("EmptyTable");
export const HighlightOutOfBoundsError = subclass("HighlightOutOfBounds");
export const EmptyHeaderError = subclass("EmptyHeader");
export const MalformedTripleError = subclass("MalformedTriple");
export const MrSyntaxError = subclass("MrSyntaxError");
export const NoHighlightsError = subclass("NoHighlights");
export const NotRectangularError = subclass("NotRectangular");
export const InconsistentColumnHeadersError = subclass("InconsistentColumnHeaders");
export const MissingHeaderError = subclass("MissingHeader");
export const UnbalancedTagError = subclass("UnbalancedTag");
export const UnexpectedTokenError = subclass("UnexpectedToken");
export const EmptyDocumentError = subclass("EmptyDocument");
export const IoError = subclass("IoError");
export const JsonError = subclass("JsonError");
export const SchemaError = subclass("SchemaError");
export const IncompatibleSchemeError = subclass("IncompatibleScheme");

/** Raised when the CLI rejects the invocation itself (exit code 1). */
export const UsageError = subclass("Usage");

/** Raised when `--validate` style round-trip checking fails in the core. */
export const RoundTripMismatchError = subclass("RoundTripMismatch");

type ErrorCtor = new (message: string, details?: ErrorDetails) => VirtabError;

/** Core code -> binding class; 1:1 with the core's ERROR_CODES list. */
export const ERROR_CLASSES: Record<string, ErrorCtor> = {
  EmptyTable: EmptyTableError,
  HighlightOutOfBounds: HighlightOutOfBoundsError,
  EmptyHeader: EmptyHeaderError,
  MalformedTriple: MalformedTripleError,
  MrSyntaxError: MrSyntaxError,
  NoHighlights: NoHighlightsError,
  NotRectangular: NotRectangularError,
  InconsistentColumnHeaders: InconsistentColumnHeadersError,
  MissingHeader: MissingHeaderError,
  UnbalancedTag: UnbalancedTagError,
  UnexpectedToken: UnexpectedTokenError,
  EmptyDocument: EmptyDocumentError,
  IoError: IoError,
  JsonError: JsonError,
  SchemaError: SchemaError,
  IncompatibleScheme: IncompatibleSchemeError,
  Usage: UsageError,
  RoundTripMismatch: RoundTripMismatchError,
};

export function errorFromEntry(entry: {
  code?: string;
  message?: string;
  id?: string;
  line?: number;
  offset?: number;
  field?: string;
}): VirtabError {
  const code = entry.code ?? "VirtabError";
  const message = entry.message ?? code;
  const details: ErrorDetails = {};
  if (entry.id !== undefined) details.id = entry.id;
  if (entry.line !== undefined) details.line = entry.line;
  if (entry.offset !== undefined) details.offset = entry.offset;
  if (entry.field !== undefined) details.field = entry.field;
  const ctor = ERROR_CLASSES[code];
  return ctor ? new ctor(message, details) : new VirtabError(code, message, details);
}

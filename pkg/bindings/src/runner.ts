import { spawnSync } from "node:child_process";
import { mkdtempSync, readFileSync, rmSync, writeFileSync } from "node:fs";
import { tmpdir } from "node:os";
import { join } from "node:path";

import { UsageError, VirtabError, errorFromEntry } from "./errors.js";
import type { BindingOptions } from "./types.js";

export interface Diagnostic {
  kind: "error" | "skip" | "summary";
  code?: string;
  message?: string;
  id?: string;
  line?: number;
  [key: string]: unknown;
}

const MAX_OUTPUT = 256 * 1024 * 1024;

function coreCommand(options?: BindingOptions): string[] {
  if (options?.command?.length) return options.command;
  const python = process.env.VIRTAB_PYTHON ?? "python3";
  return [python, "-m", "virtab"];
}

function parseDiagnostics(stderr: string): Diagnostic[] {
  const entries: Diagnostic[] = [];
  for (const line of stderr.split("\n")) {
    if (!line.trim()) continue;
    try {
      entries.push(JSON.parse(line) as Diagnostic);
    } catch {
      // non-JSON stderr (e.g. Python logging) is not a diagnostic
    }
  }
  return entries;
}

/**
 * Run one core subcommand over temp files, one process per batch call.
 *
 * `inputLines` are written to a temp JSONL input; the subcommand's `--out`
 * file (when it takes one) is read back and returned line by line. Any
 * "error" or "skip" diagnostic is raised as its mapped exception, so callers
 * see exactly the per-record semantics of the core library.
 */
export function runCore(
  subcommand: string,
  inputLines: string[],
  extraArgs: string[],
  options: BindingOptions | undefined,
  withOutFile: boolean,
): { outputLines: string[]; diagnostics: Diagnostic[] } {
  const workdir = mkdtempSync(join(tmpdir(), "virtab-"));
  try {
    const inPath = join(workdir, "in.jsonl");
    const outPath = join(workdir, "out.jsonl");
    writeFileSync(inPath, inputLines.map((line) => line + "\n").join(""), "utf8");

    const [executable, ...prefix] = coreCommand(options);
    const args = [...prefix, subcommand, "--in", inPath, ...extraArgs];
    if (withOutFile) args.push("--out", outPath);

    const proc = spawnSync(executable, args, {
      encoding: "utf8",
      maxBuffer: MAX_OUTPUT,
    });
    if (proc.error) {
      throw new VirtabError("IoError", `failed to spawn ${executable}: ${proc.error.message}`);
    }

    const diagnostics = parseDiagnostics(proc.stderr ?? "");
    if (proc.status === 1) {
      const usage = diagnostics.find((d) => d.kind === "error");
      throw new UsageError(usage?.message ?? (proc.stderr || "usage error").trim());
    }
    const failure = diagnostics.find((d) => d.kind === "error" || d.kind === "skip");
    if (failure) {
      throw errorFromEntry(
        failure.kind === "skip" ? { code: "IncompatibleScheme", ...failure } : failure,
      );
    }
    if (proc.status !== 0 && proc.status !== 2) {
      throw new VirtabError(
        "IoError",
        `core exited with status ${proc.status}: ${(proc.stderr || "").trim()}`,
      );
    }

    const outputLines = withOutFile
      ? readFileSync(outPath, "utf8").split("\n").filter((line) => line.trim() !== "")
      : [];
    return { outputLines, diagnostics };
  } finally {
    rmSync(workdir, { recursive: true, force: true });
  }
}

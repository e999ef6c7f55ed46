// Workbench state and the pure input/display rules around it. Nothing in
// this module computes the identity; it parses fields, maps classification
// strings to badges, and keeps the append-only what-if history.

import type { Assessment, SolveTarget } from './api';

export interface WorkbenchInputs {
  eta_p: string;
  eta_i: string;
  pa: string;
  pr: string;
  epsilon: string;
}

export interface HistoryEntry {
  kind: 'assess' | 'solve';
  summary: string;
}

export interface WorkbenchState {
  inputs: WorkbenchInputs;
  lastAssessment: Assessment | null;
  solveTarget: SolveTarget | null;
  history: HistoryEntry[];
}

export const DEFAULT_EPSILON = '0.05';

export function initialState(): WorkbenchState {
  return {
    inputs: { eta_p: '', eta_i: '', pa: '', pr: '', epsilon: DEFAULT_EPSILON },
    lastAssessment: null,
    solveTarget: null,
    history: [],
  };
}

export interface Badge {
  label: string;
  tone: 'over' | 'aligned' | 'under' | 'none';
}

/** Badge is a pure function of the classification string the service sent. */
export function badgeFor(classification: string): Badge {
  switch (classification) {
    case 'overestimate':
      return { label: 'Overestimate', tone: 'over' };
    case 'aligned':
      return { label: 'Aligned', tone: 'aligned' };
    case 'underestimate':
      return { label: 'Underestimate', tone: 'under' };
    default:
      return { label: classification, tone: 'none' };
  }
}

export interface FieldError {
  field: keyof WorkbenchInputs;
  message: string;
}

export function isFieldError(value: object): value is FieldError {
  return typeof (value as FieldError).message === 'string';
}

export function parseField(
  inputs: WorkbenchInputs,
  field: keyof WorkbenchInputs,
): number | FieldError {
  const raw = inputs[field].trim();
  if (raw === '') return { field, message: 'required' };
  const value = Number(raw);
  if (!Number.isFinite(value)) return { field, message: 'must be a finite number' };
  return value;
}

/**
 * Validate the fields an assess call needs. The eta_i != 0 precondition is
 * surfaced here so no request is sent for it.
 */
export function validateAssessInputs(
  inputs: WorkbenchInputs,
): { eta_p: number; eta_i: number; epsilon: number } | FieldError {
  const etaP = parseField(inputs, 'eta_p');
  if (typeof etaP !== 'number') return etaP;
  const etaI = parseField(inputs, 'eta_i');
  if (typeof etaI !== 'number') return etaI;
  if (etaI === 0) return { field: 'eta_i', message: 'income elasticity must be non-zero' };
  const epsilon = parseField(inputs, 'epsilon');
  if (typeof epsilon !== 'number') return epsilon;
  if (epsilon < 0) return { field: 'epsilon', message: 'tolerance must be >= 0' };
  return { eta_p: etaP, eta_i: etaI, epsilon };
}

/** The three fields each solve target needs from the form. */
export const SOLVE_REQUIREMENTS: Record<SolveTarget, (keyof WorkbenchInputs)[]> = {
  pa: ['pr', 'eta_p', 'eta_i'],
  pr: ['pa', 'eta_p', 'eta_i'],
  eta_p: ['pa', 'pr', 'eta_i'],
  eta_i: ['pa', 'pr', 'eta_p'],
};

export function validateSolveInputs(
  inputs: WorkbenchInputs,
  target: SolveTarget,
): Record<string, number> | FieldError {
  const known: Record<string, number> = {};
  for (const field of SOLVE_REQUIREMENTS[target]) {
    const value = parseField(inputs, field);
    if (typeof value !== 'number') return value;
    known[field] = value;
  }
  return known;
}

/** History is append-only; each completed interaction adds exactly one entry. */
export function appendHistory(state: WorkbenchState, entry: HistoryEntry): WorkbenchState {
  return { ...state, history: [...state.history, entry] };
}

/** Render a value the service returned, without trailing zero noise. */
export function formatSolved(value: number): string {
  return String(value);
}

/** Two-decimal display used for ratio and error readouts. */
export function formatStat(value: number): string {
  const text = value.toFixed(2);
  return text === '-0.00' ? '0.00' : text;
}

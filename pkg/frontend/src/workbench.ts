// Interactive pricing workbench. A marketer types elasticities and candidate
// prices, reads the perception verdict, solves for the aligned price, and
// sees their product against the 30-study corpus. All verdicts and solved
// values come from the service; this module only moves them into the DOM.

import {
  ServiceClient,
  ServiceError,
  ServiceUnreachable,
  type SolveTarget,
} from './api';
import { renderOverlay, type OverlayData } from './overlay';
import {
  appendHistory,
  badgeFor,
  formatSolved,
  formatStat,
  initialState,
  isFieldError,
  validateAssessInputs,
  validateSolveInputs,
  type FieldError,
  type WorkbenchInputs,
  type WorkbenchState,
} from './state';

const FIELD_LABELS: Record<keyof WorkbenchInputs, string> = {
  eta_p: 'Price elasticity (η_p)',
  eta_i: 'Income elasticity (η_i)',
  pa: 'Actual price (P_a)',
  pr: 'Reference price (P_r)',
  epsilon: 'Alignment tolerance (ε)',
};

const SOLVABLE: SolveTarget[] = ['pa', 'pr', 'eta_p', 'eta_i'];

const SINGULAR_EXPLANATION =
  'Not solvable for these inputs: the elasticity ratio equals 2, the boundary ' +
  'where the price gap equals the actual price, so the rearrangement has no ' +
  'unique answer. Nudge one of the other values.';

function fieldMarkup(field: keyof WorkbenchInputs, solvable: boolean): string {
  const solveButton = solvable
    ? `<button type="button" class="solve-button" data-target="${field}">solve</button>`
    : '';
  return `
    <label class="field" data-field="${field}">
      <span>${FIELD_LABELS[field]}</span>
      <span class="control">
        <input id="field-${field}" autocomplete="off" />
        ${solveButton}
      </span>
      <span class="field-error" id="error-${field}" hidden></span>
    </label>`;
}

export interface WorkbenchHandle {
  /** Resolves once the corpus overlay fetches have settled. */
  ready: Promise<void>;
  state(): WorkbenchState;
}

export function mountWorkbench(root: HTMLElement, client: ServiceClient): WorkbenchHandle {
  let state = initialState();
  let overlayData: OverlayData | null = null;
  let lastFailed: (() => Promise<void>) | null = null;

  root.innerHTML = `
    <div class="workbench">
      <div id="offline-banner" class="banner" hidden>
        <span>Service unreachable.</span>
        <button type="button" id="retry-button">Retry</button>
      </div>
      <section class="panel">
        <h2>Perception check</h2>
        <form id="inputs-form">
          ${fieldMarkup('eta_p', true)}
          ${fieldMarkup('eta_i', true)}
          ${fieldMarkup('pa', true)}
          ${fieldMarkup('pr', true)}
          <details class="advanced">
            <summary>Advanced</summary>
            ${fieldMarkup('epsilon', false)}
          </details>
          <button type="submit" id="assess-button">Assess</button>
        </form>
        <div id="assessment-result" hidden>
          <span id="badge" class="badge"></span>
          <dl>
            <dt>Perception error</dt><dd id="error-value"></dd>
            <dt>Elasticity ratio</dt><dd id="ratio-value"></dd>
          </dl>
        </div>
        <p id="interaction-error" class="interaction-error" hidden></p>
        <ul id="solve-warnings" class="warnings"></ul>
      </section>
      <section class="panel">
        <h2>Against the corpus</h2>
        <div id="overlay"></div>
      </section>
      <section class="panel">
        <h2>History</h2>
        <ol id="history"></ol>
      </section>
    </div>`;

  const byId = <T extends HTMLElement>(id: string): T => {
    const node = root.querySelector<T>(`#${id}`);
    if (!node) throw new Error(`missing element: ${id}`);
    return node;
  };

  const form = byId<HTMLFormElement>('inputs-form');
  const banner = byId<HTMLDivElement>('offline-banner');
  const resultBox = byId<HTMLDivElement>('assessment-result');
  const badge = byId<HTMLSpanElement>('badge');
  const errorValue = byId<HTMLElement>('error-value');
  const ratioValue = byId<HTMLElement>('ratio-value');
  const interactionError = byId<HTMLParagraphElement>('interaction-error');
  const warningsList = byId<HTMLUListElement>('solve-warnings');
  const overlayBox = byId<HTMLDivElement>('overlay');
  const historyList = byId<HTMLOListElement>('history');

  const input = (field: keyof WorkbenchInputs): HTMLInputElement =>
    byId<HTMLInputElement>(`field-${field}`);
  input('epsilon').value = state.inputs.epsilon;

  function readInputs(): void {
    for (const field of Object.keys(state.inputs) as (keyof WorkbenchInputs)[]) {
      state.inputs[field] = input(field).value;
    }
  }

  function clearFieldErrors(): void {
    for (const field of Object.keys(state.inputs) as (keyof WorkbenchInputs)[]) {
      const node = byId<HTMLSpanElement>(`error-${field}`);
      node.hidden = true;
      node.textContent = '';
    }
    interactionError.hidden = true;
    interactionError.textContent = '';
  }

  function showFieldError(error: FieldError): void {
    const node = byId<HTMLSpanElement>(`error-${error.field}`);
    node.textContent = error.message;
    node.hidden = false;
  }

  function showInteractionError(message: string): void {
    interactionError.textContent = message;
    interactionError.hidden = false;
  }

  function userPoint(): [number, number] | null {
    const etaI = Number(state.inputs.eta_i.trim());
    const etaP = Number(state.inputs.eta_p.trim());
    if (
      state.inputs.eta_i.trim() === '' ||
      state.inputs.eta_p.trim() === '' ||
      !Number.isFinite(etaI) ||
      !Number.isFinite(etaP)
    ) {
      return null;
    }
    return [etaI, etaP];
  }

  function redrawOverlay(): void {
    renderOverlay(overlayBox, overlayData, userPoint());
  }

  function pushHistory(kind: 'assess' | 'solve', summary: string): void {
    state = appendHistory(state, { kind, summary });
    const item = document.createElement('li');
    item.textContent = summary;
    historyList.appendChild(item);
  }

  function handleFailure(error: unknown, retry: () => Promise<void>): void {
    if (error instanceof ServiceUnreachable) {
      lastFailed = retry;
      banner.hidden = false;
      return;
    }
    if (error instanceof ServiceError) {
      if (error.code === 'singular_rearrangement') {
        showInteractionError(SINGULAR_EXPLANATION);
      } else {
        showInteractionError(error.message);
      }
      return;
    }
    showInteractionError(String(error));
  }

  async function runAssess(): Promise<void> {
    readInputs();
    clearFieldErrors();
    warningsList.textContent = '';
    const parsed = validateAssessInputs(state.inputs);
    if (isFieldError(parsed)) {
      showFieldError(parsed);
      return;
    }
    const button = byId<HTMLButtonElement>('assess-button');
    button.disabled = true;
    try {
      const assessment = await client.assess(parsed.eta_p, parsed.eta_i, parsed.epsilon);
      banner.hidden = true;
      state.lastAssessment = assessment;
      const verdict = badgeFor(assessment.classification);
      badge.textContent = verdict.label;
      badge.className = `badge badge-${verdict.tone}`;
      errorValue.textContent = formatStat(assessment.error);
      ratioValue.textContent = formatStat(assessment.ratio);
      resultBox.hidden = false;
      pushHistory(
        'assess',
        `assess η_p=${parsed.eta_p}, η_i=${parsed.eta_i}: ` +
          `error ${formatStat(assessment.error)} (${verdict.label})`,
      );
      redrawOverlay();
    } catch (error) {
      handleFailure(error, runAssess);
    } finally {
      button.disabled = false;
    }
  }

  async function runSolve(target: SolveTarget): Promise<void> {
    readInputs();
    clearFieldErrors();
    warningsList.textContent = '';
    const known = validateSolveInputs(state.inputs, target);
    if (isFieldError(known)) {
      showFieldError(known);
      return;
    }
    const button = root.querySelector<HTMLButtonElement>(
      `.solve-button[data-target="${target}"]`,
    );
    if (button) button.disabled = true;
    state.solveTarget = target;
    try {
      const outcome = await client.solve(target, known);
      banner.hidden = true;
      const text = formatSolved(outcome.value);
      input(target).value = text;
      state.inputs[target] = text;
      for (const warning of outcome.warnings) {
        const item = document.createElement('li');
        item.textContent = warning;
        warningsList.appendChild(item);
      }
      pushHistory('solve', `solve ${target}: ${text}`);
      redrawOverlay();
    } catch (error) {
      handleFailure(error, () => runSolve(target));
    } finally {
      if (button) button.disabled = false;
    }
  }

  form.addEventListener('submit', (event) => {
    event.preventDefault();
    void runAssess();
  });

  for (const target of SOLVABLE) {
    const button = root.querySelector<HTMLButtonElement>(
      `.solve-button[data-target="${target}"]`,
    );
    button?.addEventListener('click', () => void runSolve(target));
  }

  form.addEventListener('input', () => {
    readInputs();
    redrawOverlay();
  });

  byId<HTMLButtonElement>('retry-button').addEventListener('click', () => {
    banner.hidden = true;
    const retry = lastFailed;
    lastFailed = null;
    if (retry) void retry();
  });

  async function loadOverlay(): Promise<void> {
    try {
      const [figure, dataset] = await Promise.all([client.figure2(), client.dataset()]);
      overlayData = { figure, records: dataset.records };
      banner.hidden = true;
    } catch (error) {
      overlayData = null;
      handleFailure(error, loadOverlay);
    }
    redrawOverlay();
  }

  const ready = loadOverlay();
  return { ready, state: () => state };
}

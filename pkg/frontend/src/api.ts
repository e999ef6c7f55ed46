// Typed client for the perception service. The workbench never computes the
// identity itself; every displayed number originates from these responses.

export type SolveTarget = 'pa' | 'pr' | 'eta_p' | 'eta_i';

export interface Assessment {
  ratio: number;
  error: number;
  classification: string;
  epsilon: number;
}

export interface SolveOutcome {
  value: number;
  warnings: string[];
}

export interface DatasetRecord {
  commodity: string;
  eta_p: number;
  eta_i: number;
  source: string;
  published_ratio: number;
  published_error: number;
  recomputed_ratio: number | null;
  recomputed_error: number | null;
  ratio: number | null;
  error: number | null;
  classification: string | null;
}

export interface DatasetPayload {
  count: number;
  mode: string;
  records: DatasetRecord[];
}

export interface PlotSeries {
  name: string;
  kind: 'scatter' | 'curve' | 'histogram';
  points: [number, number][];
  bins: [number, number, number][];
  point_labels: string[];
}

export interface PlotPayload {
  title: string;
  kind: string;
  axis_labels: [string, string];
  series: PlotSeries[];
}

/** Structured error body the service sends with 4xx statuses. */
export class ServiceError extends Error {
  constructor(
    readonly status: number,
    readonly code: string,
    message: string,
    readonly field?: string,
  ) {
    super(message);
    this.name = 'ServiceError';
  }
}

/** Network-level failure: the service did not answer at all. */
export class ServiceUnreachable extends Error {
  constructor(readonly baseUrl: string, cause: unknown) {
    super(`service unreachable at ${baseUrl}: ${String(cause)}`);
    this.name = 'ServiceUnreachable';
  }
}

const JSON_HEADERS = { 'Content-Type': 'application/json' };

export class ServiceClient {
  constructor(readonly baseUrl: string) {}

  private async request<T>(path: string, init?: RequestInit): Promise<T> {
    let response: Response;
    try {
      response = await fetch(this.baseUrl + path, init);
    } catch (cause) {
      throw new ServiceUnreachable(this.baseUrl, cause);
    }
    const payload = await response.json();
    if (!response.ok) {
      throw new ServiceError(
        response.status,
        payload.code ?? 'unknown',
        payload.message ?? `HTTP ${response.status}`,
        payload.field,
      );
    }
    return payload as T;
  }

  health(): Promise<{ status: string }> {
    return this.request('/health');
  }

  assess(etaP: number, etaI: number, epsilon?: number): Promise<Assessment> {
    const body: Record<string, number> = { eta_p: etaP, eta_i: etaI };
    if (epsilon !== undefined) body.epsilon = epsilon;
    return this.request('/v1/perception/assess', {
      method: 'POST',
      headers: JSON_HEADERS,
      body: JSON.stringify(body),
    });
  }

  async solve(target: SolveTarget, known: Record<string, number>): Promise<SolveOutcome> {
    const payload = await this.request<Record<string, unknown>>('/v1/perception/solve', {
      method: 'POST',
      headers: JSON_HEADERS,
      body: JSON.stringify({ solve_for: target, ...known }),
    });
    return {
      value: payload[target] as number,
      warnings: (payload.warnings as string[]) ?? [],
    };
  }

  dataset(mode: 'recomputed' | 'as_published' = 'recomputed'): Promise<DatasetPayload> {
    return this.request(`/v1/dataset?mode=${mode}`);
  }

  figure2(): Promise<PlotPayload> {
    return this.request('/v1/figures/figure2');
  }
}

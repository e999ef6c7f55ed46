// SVG overlay of the study corpus: the scatter of published elasticity
// pairs, the fitted curve from the figure payload, and the user's own
// (eta_i, eta_p) point. Only pixel placement happens here; every data value
// is taken from the service payloads untouched.

import type { DatasetRecord, PlotPayload, PlotSeries } from './api';
import { formatStat } from './state';

const SVG_NS = 'http://www.w3.org/2000/svg';

const WIDTH = 640;
const HEIGHT = 440;
const LEFT = 60;
const RIGHT = WIDTH - 20;
const TOP = 24;
const BOTTOM = HEIGHT - 44;

export interface OverlayData {
  figure: PlotPayload;
  records: DatasetRecord[];
}

interface Extent {
  xMin: number;
  xMax: number;
  yMin: number;
  yMax: number;
}

function extentOf(figure: PlotPayload, userPoint: [number, number] | null): Extent {
  const xs: number[] = [];
  const ys: number[] = [];
  for (const series of figure.series) {
    for (const [x, y] of series.points) {
      xs.push(x);
      ys.push(y);
    }
  }
  if (userPoint) {
    xs.push(userPoint[0]);
    ys.push(userPoint[1]);
  }
  const pad = (low: number, high: number): [number, number] => {
    const span = high - low || 1;
    return [low - 0.05 * span, high + 0.05 * span];
  };
  const [xMin, xMax] = pad(Math.min(...xs), Math.max(...xs));
  const [yMin, yMax] = pad(Math.min(...ys), Math.max(...ys));
  return { xMin, xMax, yMin, yMax };
}

function element<K extends keyof SVGElementTagNameMap>(
  tag: K,
  attributes: Record<string, string>,
): SVGElementTagNameMap[K] {
  const node = document.createElementNS(SVG_NS, tag);
  for (const [key, value] of Object.entries(attributes)) {
    node.setAttribute(key, value);
  }
  return node;
}

function findSeries(figure: PlotPayload, kind: string): PlotSeries | undefined {
  return figure.series.find((series) => series.kind === kind);
}

function tooltipText(record: DatasetRecord): string {
  const ratio = record.ratio === null ? 'n/a' : formatStat(record.ratio);
  const error = record.error === null ? 'n/a' : formatStat(record.error);
  return `${record.commodity}\nratio ${ratio}, error ${error}\n${record.source}`;
}

/**
 * Draw the corpus scatter into `container`, replacing any previous render.
 * `userPoint` is the user's current (eta_i, eta_p) pair, or null for the
 * corpus-only view before any inputs are entered.
 */
export function renderOverlay(
  container: HTMLElement,
  data: OverlayData | null,
  userPoint: [number, number] | null,
): void {
  container.textContent = '';
  if (!data) {
    const placeholder = document.createElement('p');
    placeholder.className = 'overlay-placeholder';
    placeholder.textContent = 'Corpus unavailable: the service could not be reached.';
    container.appendChild(placeholder);
    return;
  }
  const { figure, records } = data;
  const extent = extentOf(figure, userPoint);
  const sx = (x: number): number =>
    LEFT + ((x - extent.xMin) / (extent.xMax - extent.xMin)) * (RIGHT - LEFT);
  const sy = (y: number): number =>
    BOTTOM - ((y - extent.yMin) / (extent.yMax - extent.yMin)) * (BOTTOM - TOP);

  const svg = element('svg', {
    viewBox: `0 0 ${WIDTH} ${HEIGHT}`,
    width: String(WIDTH),
    height: String(HEIGHT),
    role: 'img',
    'aria-label': figure.title,
  });

  svg.appendChild(element('line', {
    x1: String(LEFT), y1: String(BOTTOM), x2: String(RIGHT), y2: String(BOTTOM),
    class: 'axis',
  }));
  svg.appendChild(element('line', {
    x1: String(LEFT), y1: String(TOP), x2: String(LEFT), y2: String(BOTTOM),
    class: 'axis',
  }));
  const xLabel = element('text', {
    x: String((LEFT + RIGHT) / 2), y: String(HEIGHT - 10), class: 'axis-label',
    'text-anchor': 'middle',
  });
  xLabel.textContent = figure.axis_labels[0];
  svg.appendChild(xLabel);
  const yLabel = element('text', {
    x: '16', y: String((TOP + BOTTOM) / 2), class: 'axis-label',
    'text-anchor': 'middle',
    transform: `rotate(-90 16 ${(TOP + BOTTOM) / 2})`,
  });
  yLabel.textContent = figure.axis_labels[1];
  svg.appendChild(yLabel);

  const curve = findSeries(figure, 'curve');
  if (curve && curve.points.length > 1) {
    const path = curve.points
      .map(([x, y], i) => `${i === 0 ? 'M' : 'L'}${sx(x).toFixed(1)},${sy(y).toFixed(1)}`)
      .join(' ');
    svg.appendChild(element('path', { d: path, class: 'fit-curve', fill: 'none' }));
  }

  const tooltip = document.createElement('div');
  tooltip.className = 'overlay-tooltip';
  tooltip.hidden = true;

  const scatter = findSeries(figure, 'scatter');
  if (scatter) {
    scatter.points.forEach(([x, y], index) => {
      const circle = element('circle', {
        cx: sx(x).toFixed(1),
        cy: sy(y).toFixed(1),
        r: '5',
        class: 'corpus-point',
      });
      const record = records[index];
      const label = scatter.point_labels[index] ?? record?.commodity ?? '';
      circle.setAttribute('data-commodity', label);
      circle.addEventListener('mouseenter', () => {
        if (!record) return;
        tooltip.textContent = tooltipText(record);
        tooltip.style.left = `${sx(x) + 12}px`;
        tooltip.style.top = `${sy(y) - 8}px`;
        tooltip.hidden = false;
      });
      circle.addEventListener('mouseleave', () => {
        tooltip.hidden = true;
      });
      svg.appendChild(circle);
    });
  }

  if (userPoint) {
    const marker = element('circle', {
      cx: sx(userPoint[0]).toFixed(1),
      cy: sy(userPoint[1]).toFixed(1),
      r: '7',
      class: 'user-point',
    });
    svg.appendChild(marker);
    const halo = element('circle', {
      cx: sx(userPoint[0]).toFixed(1),
      cy: sy(userPoint[1]).toFixed(1),
      r: '11',
      class: 'user-point-halo',
      fill: 'none',
    });
    svg.appendChild(halo);
  }

  container.appendChild(svg);
  container.appendChild(tooltip);
}

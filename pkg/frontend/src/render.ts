// DOM builders. Every number and label shown comes straight from a payload
// field; the contract tests in tests/render.spec.ts hold the rendered text
// to exactly the fixture values.

import type {
  ModelVerdict,
  NeighborEntry,
  SentenceVerdict,
} from './types';

function verdictClass(verdict: string): string {
  return verdict === 'Misinformative' ? 'verdict-misinformative' : 'verdict-informative';
}

export function renderVerdictCards(container: HTMLElement, verdicts: ModelVerdict[]): void {
  container.replaceChildren();
  for (const entry of verdicts) {
    const card = document.createElement('div');
    card.className = `verdict-card ${verdictClass(entry.verdict)}`;

    const tag = document.createElement('span');
    tag.className = 'model-tag';
    tag.textContent = entry.group ? `${entry.group} / ${entry.model}` : entry.model;

    const label = document.createElement('span');
    label.className = 'verdict-label';
    label.textContent = entry.verdict;

    const bar = document.createElement('div');
    bar.className = 'prob-bar';
    const fill = document.createElement('div');
    fill.className = 'prob-fill';
    fill.style.width = `${entry.probability * 100}%`;
    bar.appendChild(fill);

    const value = document.createElement('span');
    value.className = 'prob-value';
    value.textContent = String(entry.probability);

    card.append(tag, label, bar, value);
    container.appendChild(card);
  }
}

export function renderSentenceSpans(container: HTMLElement, sentences: SentenceVerdict[]): void {
  container.replaceChildren();
  for (const entry of sentences) {
    const span = document.createElement('span');
    span.className = `sentence ${verdictClass(entry.verdict)}`;
    span.textContent = entry.sentence;
    span.title = `${entry.verdict} (${entry.probability})`;
    container.appendChild(span);
    container.appendChild(document.createTextNode(' '));
  }
}

export function renderNeighborRows(tbody: HTMLElement, neighbors: NeighborEntry[]): void {
  tbody.replaceChildren();
  for (const entry of neighbors) {
    const row = document.createElement('tr');
    row.className = `neighbor-row ${verdictClass(entry.label)}`;
    for (const text of [
      entry.text,
      entry.label,
      String(entry.similarity),
      String(entry.weight),
    ]) {
      const cell = document.createElement('td');
      cell.textContent = text;
      row.appendChild(cell);
    }
    tbody.appendChild(row);
  }
}

export function renderErrorBanner(container: HTMLElement, message: string): void {
  container.replaceChildren();
  const banner = document.createElement('div');
  banner.className = 'error-banner';
  banner.setAttribute('role', 'alert');
  banner.textContent = message;
  const retry = document.createElement('button');
  retry.className = 'retry-button';
  retry.textContent = 'Retry';
  banner.appendChild(retry);
  container.appendChild(banner);
}

export function clear(container: HTMLElement): void {
  container.replaceChildren();
}

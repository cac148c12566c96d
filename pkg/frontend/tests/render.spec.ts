// Contract tests against fixtures recorded from the real service: rendered
// counts and values must equal the payload fields exactly.

import { describe, expect, it } from 'vitest';

import paragraphFixture from '../fixtures/paragraph.json';
import sentencesFixture from '../fixtures/sentences.json';
import similarFixture from '../fixtures/similar.json';
import tweetFixture from '../fixtures/tweet.json';

import {
  renderErrorBanner,
  renderNeighborRows,
  renderSentenceSpans,
  renderVerdictCards,
} from '../src/render';
import type { ModelVerdict, NeighborEntry, SentenceVerdict } from '../src/types';

describe('verdict cards', () => {
  const verdicts = paragraphFixture.verdicts as ModelVerdict[];

  it('renders one card per payload verdict', () => {
    const host = document.createElement('div');
    renderVerdictCards(host, verdicts);
    expect(host.querySelectorAll('.verdict-card')).toHaveLength(verdicts.length);
  });

  it('shows the payload model, verdict, and probability verbatim', () => {
    const host = document.createElement('div');
    renderVerdictCards(host, verdicts);
    const cards = [...host.querySelectorAll('.verdict-card')];
    cards.forEach((card, i) => {
      expect(card.querySelector('.model-tag')?.textContent).toBe(verdicts[i].model);
      expect(card.querySelector('.verdict-label')?.textContent).toBe(verdicts[i].verdict);
      expect(card.querySelector('.prob-value')?.textContent).toBe(
        String(verdicts[i].probability)
      );
    });
  });

  it('bar width tracks the payload probability', () => {
    const host = document.createElement('div');
    renderVerdictCards(host, verdicts);
    const fill = host.querySelector<HTMLElement>('.prob-fill');
    expect(fill?.style.width).toBe(`${verdicts[0].probability * 100}%`);
  });

  it('renders both groups for a tweet check', () => {
    const host = document.createElement('div');
    renderVerdictCards(host, tweetFixture.verdicts as ModelVerdict[]);
    const tags = [...host.querySelectorAll('.model-tag')].map((n) => n.textContent);
    expect(tags).toHaveLength(2);
    expect(tags[0]).toContain('network');
    expect(tags[1]).toContain('content');
  });

  it('re-rendering replaces, never appends', () => {
    const host = document.createElement('div');
    renderVerdictCards(host, verdicts);
    renderVerdictCards(host, verdicts);
    expect(host.querySelectorAll('.verdict-card')).toHaveLength(verdicts.length);
  });
});

describe('sentence spans', () => {
  const sentences = sentencesFixture.sentences as SentenceVerdict[];

  it('renders one highlighted span per sentence in the breakdown', () => {
    const host = document.createElement('p');
    renderSentenceSpans(host, sentences);
    expect(host.querySelectorAll('.sentence')).toHaveLength(sentences.length);
  });

  it('span text and verdict class come from the payload', () => {
    const host = document.createElement('p');
    renderSentenceSpans(host, sentences);
    const spans = [...host.querySelectorAll('.sentence')];
    spans.forEach((span, i) => {
      expect(span.textContent).toBe(sentences[i].sentence);
      const expected =
        sentences[i].verdict === 'Misinformative'
          ? 'verdict-misinformative'
          : 'verdict-informative';
      expect(span.classList.contains(expected)).toBe(true);
      expect(span.getAttribute('title')).toContain(String(sentences[i].probability));
    });
  });

  it('fixture exercises both verdict classes', () => {
    const kinds = new Set(sentences.map((s) => s.verdict));
    expect(kinds.size).toBe(2);
  });

  it('single sentence renders a single span', () => {
    const host = document.createElement('p');
    renderSentenceSpans(host, sentences.slice(0, 1));
    expect(host.querySelectorAll('.sentence')).toHaveLength(1);
  });
});

describe('neighbor rows', () => {
  const neighbors = similarFixture.neighbors as NeighborEntry[];

  it('renders at most k rows, in payload order', () => {
    const tbody = document.createElement('tbody');
    renderNeighborRows(tbody, neighbors);
    const rows = [...tbody.querySelectorAll('tr')];
    expect(rows.length).toBe(neighbors.length);
    expect(rows.length).toBeLessThanOrEqual(similarFixture.k);
    rows.forEach((row, i) => {
      const cells = [...row.querySelectorAll('td')].map((c) => c.textContent);
      expect(cells).toEqual([
        neighbors[i].text,
        neighbors[i].label,
        String(neighbors[i].similarity),
        String(neighbors[i].weight),
      ]);
    });
  });

  it('payload order is already similarity-descending (no client sorting)', () => {
    const sims = neighbors.map((n) => n.similarity);
    const sorted = [...sims].sort((a, b) => b - a);
    expect(sims).toEqual(sorted);
  });
});

describe('error banner', () => {
  it('renders an alert with a retry button and no cards', () => {
    const host = document.createElement('div');
    renderErrorBanner(host, 'unknown_model: unknown model tags');
    const banner = host.querySelector('.error-banner');
    expect(banner?.getAttribute('role')).toBe('alert');
    expect(banner?.textContent).toContain('unknown_model');
    expect(host.querySelector('.retry-button')).not.toBeNull();
    expect(host.querySelectorAll('.verdict-card')).toHaveLength(0);
  });
});

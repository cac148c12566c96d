// Browser bootstrap: looks up the static panels in index.html and wires
// them to the service (same origin by default, ?api=... to point elsewhere).

import { ApiClient } from './api';
import { ClaimPanel, SentencePanel, SimilarPanel } from './app';

function el<T extends HTMLElement>(id: string): T {
  const node = document.getElementById(id);
  if (!node) throw new Error(`missing #${id}`);
  return node as T;
}

export function boot(): void {
  const base = new URLSearchParams(window.location.search).get('api') ?? '';
  const api = new ApiClient(base);

  new ClaimPanel(api, {
    input: el<HTMLTextAreaElement>('claim-input'),
    submit: el<HTMLButtonElement>('claim-submit'),
    output: el('claim-cards'),
    error: el('claim-error')
  });

  new SentencePanel(
    api,
    {
      input: el<HTMLTextAreaElement>('sentence-input'),
      submit: el<HTMLButtonElement>('sentence-submit'),
      output: el('sentence-spans'),
      error: el('sentence-error'),
      feedback: el('sentence-feedback')
    },
    el<HTMLInputElement>('sentence-model').value || 'nb'
  );

  new SimilarPanel(api, {
    input: el<HTMLTextAreaElement>('similar-input'),
    submit: el<HTMLButtonElement>('similar-submit'),
    output: el('neighbor-rows'),
    error: el('similar-error')
  });
}

if (typeof document !== 'undefined' && document.readyState !== 'loading') {
  boot();
} else if (typeof document !== 'undefined') {
  document.addEventListener('DOMContentLoaded', boot);
}

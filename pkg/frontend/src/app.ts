// Panel controllers: wire form inputs to the API client and the renderers.
// Each panel allows at most one in-flight request and preserves the entered
// text across checks.

import { ApiClient, ApiError } from './api';
import { FeedbackControl, mountFeedbackButtons } from './feedback';
import {
  clear,
  renderErrorBanner,
  renderNeighborRows,
  renderSentenceSpans,
  renderVerdictCards,
} from './render';

export interface PanelElements {
  input: HTMLTextAreaElement | HTMLInputElement;
  submit: HTMLButtonElement;
  output: HTMLElement;
  error: HTMLElement;
  feedback?: HTMLElement;
}

function errorMessage(err: unknown): string {
  if (err instanceof ApiError) {
    return `${err.code}: ${err.message}`;
  }
  return String(err);
}

export class ClaimPanel {
  busy = false;
  lastCheckId: string | null = null;

  constructor(
    private readonly api: ApiClient,
    private readonly els: PanelElements,
    private readonly modelTags?: string[]
  ) {
    this.els.input.addEventListener('input', () => this.syncSubmit());
    this.els.submit.addEventListener('click', () => {
      void this.check();
    });
    this.syncSubmit();
  }

  syncSubmit(): void {
    this.els.submit.disabled = this.busy || this.els.input.value.trim() === '';
  }

  async check(): Promise<void> {
    if (this.busy || this.els.input.value.trim() === '') return;
    this.busy = true;
    this.syncSubmit();
    clear(this.els.error);
    try {
      const result = await this.api.checkParagraph(
        this.els.input.value,
        this.modelTags
      );
      this.lastCheckId = result.check_id;
      renderVerdictCards(this.els.output, result.verdicts);
    } catch (err) {
      clear(this.els.output);
      renderErrorBanner(this.els.error, errorMessage(err));
    } finally {
      this.busy = false;
      this.syncSubmit();
    }
  }
}

export class SentencePanel {
  busy = false;
  lastCheckId: string | null = null;

  constructor(
    private readonly api: ApiClient,
    private readonly els: PanelElements,
    private readonly modelTag: string
  ) {
    this.els.input.addEventListener('input', () => this.syncSubmit());
    this.els.submit.addEventListener('click', () => {
      void this.check();
    });
    this.syncSubmit();
  }

  syncSubmit(): void {
    this.els.submit.disabled = this.busy || this.els.input.value.trim() === '';
  }

  async check(): Promise<void> {
    if (this.busy || this.els.input.value.trim() === '') return;
    this.busy = true;
    this.syncSubmit();
    clear(this.els.error);
    try {
      const result = await this.api.checkSentences(
        this.els.input.value,
        this.modelTag
      );
      this.lastCheckId = result.check_id;
      renderSentenceSpans(this.els.output, result.sentences);
      if (this.els.feedback) {
        const control = new FeedbackControl(this.api, result.check_id);
        mountFeedbackButtons(this.els.feedback, control);
      }
    } catch (err) {
      clear(this.els.output);
      renderErrorBanner(this.els.error, errorMessage(err));
    } finally {
      this.busy = false;
      this.syncSubmit();
    }
  }
}

export class SimilarPanel {
  busy = false;

  constructor(
    private readonly api: ApiClient,
    private readonly els: PanelElements,
    private readonly k?: number
  ) {
    this.els.input.addEventListener('input', () => this.syncSubmit());
    this.els.submit.addEventListener('click', () => {
      void this.check();
    });
    this.syncSubmit();
  }

  syncSubmit(): void {
    this.els.submit.disabled = this.busy || this.els.input.value.trim() === '';
  }

  async check(): Promise<void> {
    if (this.busy || this.els.input.value.trim() === '') return;
    this.busy = true;
    this.syncSubmit();
    clear(this.els.error);
    try {
      const result = await this.api.similar(this.els.input.value, this.k);
      renderNeighborRows(this.els.output, result.neighbors);
    } catch (err) {
      clear(this.els.output);
      renderErrorBanner(this.els.error, errorMessage(err));
    } finally {
      this.busy = false;
      this.syncSubmit();
    }
  }
}

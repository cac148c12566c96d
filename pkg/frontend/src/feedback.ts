import type { ApiClient } from './api';
import type { FeedbackAck } from './types';

export type FeedbackState = 'idle' | 'pending' | 'acknowledged';

// One controller per rendered check. At most one request is in flight, and
// once a vote is acknowledged the buttons stay disabled (the server keeps
// the last vote; the UI reflects it).
export class FeedbackControl {
  state: FeedbackState = 'idle';
  lastVote: 'like' | 'dislike' | null = null;
  onChange: (control: FeedbackControl) => void = () => {};

  constructor(
    private readonly api: ApiClient,
    private readonly checkId: string
  ) {}

  get buttonsDisabled(): boolean {
    return this.state !== 'idle';
  }

  async vote(vote: 'like' | 'dislike'): Promise<FeedbackAck | null> {
    if (this.state !== 'idle') {
      return null;
    }
    this.state = 'pending';
    this.onChange(this);
    try {
      const ack = await this.api.sendFeedback(this.checkId, vote);
      this.state = 'acknowledged';
      this.lastVote = ack.vote;
      this.onChange(this);
      return ack;
    } catch (err) {
      this.state = 'idle';
      this.onChange(this);
      throw err;
    }
  }
}

export function mountFeedbackButtons(
  container: HTMLElement,
  control: FeedbackControl
): void {
  container.replaceChildren();
  const likeButton = document.createElement('button');
  likeButton.className = 'feedback-like';
  likeButton.textContent = 'Like';
  const dislikeButton = document.createElement('button');
  dislikeButton.className = 'feedback-dislike';
  dislikeButton.textContent = 'Dislike';
  const status = document.createElement('span');
  status.className = 'feedback-status';

  control.onChange = (ctl) => {
    likeButton.disabled = ctl.buttonsDisabled;
    dislikeButton.disabled = ctl.buttonsDisabled;
    status.textContent =
      ctl.state === 'acknowledged' ? `Recorded: ${ctl.lastVote}` : '';
  };
  likeButton.addEventListener('click', () => {
    void control.vote('like').catch(() => {});
  });
  dislikeButton.addEventListener('click', () => {
    void control.vote('dislike').catch(() => {});
  });
  control.onChange(control);
  container.append(likeButton, dislikeButton, status);
}

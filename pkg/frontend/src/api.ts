import type {
  FeedbackAck,
  ParagraphResult,
  SentencesResult,
  SimilarResult,
  TweetResult,
} from './types';

export class ApiError extends Error {
  constructor(
    readonly status: number,
    readonly code: string,
    message: string
  ) {
    super(message);
  }
}

type FetchLike = typeof fetch;

export class ApiClient {
  constructor(
    private readonly baseUrl: string = '',
    private readonly fetchImpl: FetchLike = fetch
  ) {}

  private async post<T>(path: string, body: unknown): Promise<T> {
    let response: Response;
    try {
      response = await this.fetchImpl(`${this.baseUrl}${path}`, {
        method: 'POST',
        headers: { 'content-type': 'application/json' },
        body: JSON.stringify(body)
      });
    } catch (err) {
      throw new ApiError(0, 'network_error', String(err));
    }
    if (!response.ok) {
      const detail = await this.errorDetail(response);
      throw new ApiError(response.status, detail.code, detail.message);
    }
    return (await response.json()) as T;
  }

  private async errorDetail(response: Response): Promise<{ code: string; message: string }> {
    try {
      const body = (await response.json()) as { detail?: unknown };
      const detail = body.detail;
      if (detail && typeof detail === 'object' && 'code' in detail) {
        return detail as { code: string; message: string };
      }
      return { code: 'http_error', message: JSON.stringify(detail ?? body) };
    } catch {
      return { code: 'http_error', message: `HTTP ${response.status}` };
    }
  }

  checkParagraph(text: string, modelTags?: string[]): Promise<ParagraphResult> {
    const body: { text: string; model_tags?: string[] } = { text };
    if (modelTags && modelTags.length > 0) body.model_tags = modelTags;
    return this.post('/check/paragraph', body);
  }

  checkSentences(text: string, modelTag: string): Promise<SentencesResult> {
    return this.post('/check/sentences', { text, model_tag: modelTag });
  }

  checkTweet(record: object): Promise<TweetResult> {
    return this.post('/check/tweet', record);
  }

  similar(text: string, k?: number, metric?: string): Promise<SimilarResult> {
    const body: { text: string; k?: number; metric?: string } = { text };
    if (k !== undefined) body.k = k;
    if (metric !== undefined) body.metric = metric;
    return this.post('/similar', body);
  }

  sendFeedback(checkId: string, vote: 'like' | 'dislike'): Promise<FeedbackAck> {
    return this.post('/feedback', { check_id: checkId, vote });
  }
}

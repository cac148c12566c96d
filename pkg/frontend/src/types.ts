// Payload shapes mirror docs/http-api.md exactly; the console renders these
// values verbatim and never recomputes anything.

export type VerdictLabel = 'Misinformative' | 'Informative';

export interface ModelVerdict {
  model: string;
  verdict: VerdictLabel;
  probability: number;
  group?: string;
}

export interface ParagraphResult {
  check_id: string;
  text: string;
  verdicts: ModelVerdict[];
  created_at: number;
}

export interface SentenceVerdict {
  sentence: string;
  verdict: VerdictLabel;
  probability: number;
}

export interface SentencesResult {
  check_id: string;
  text: string;
  model: string;
  sentences: SentenceVerdict[];
  created_at: number;
}

export interface TweetResult {
  check_id: string;
  id: string;
  verdicts: ModelVerdict[];
  created_at: number;
}

export interface NeighborEntry {
  source_id: string;
  text: string;
  label: VerdictLabel;
  similarity: number;
  weight: number;
}

export interface SimilarResult {
  check_id: string;
  text: string;
  metric: string;
  k: number;
  verdict: VerdictLabel;
  score: number;
  neighbors: NeighborEntry[];
  created_at: number;
}

export interface FeedbackAck {
  recorded: boolean;
  check_id: string;
  vote: 'like' | 'dislike';
  timestamp: number;
}

export interface ApiErrorBody {
  detail: { code: string; message: string };
}

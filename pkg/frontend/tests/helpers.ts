export interface RecordedCall {
  url: string;
  method: string;
  body: unknown;
}

export function mockFetch(
  responder: (url: string, body: unknown) => { status: number; body: unknown }
): { fetch: typeof fetch; calls: RecordedCall[] } {
  const calls: RecordedCall[] = [];
  const impl = (async (input: RequestInfo | URL, init?: RequestInit) => {
    const url = String(input);
    const body = init?.body ? JSON.parse(String(init.body)) : undefined;
    calls.push({ url, method: init?.method ?? 'GET', body });
    const out = responder(url, body);
    return new Response(JSON.stringify(out.body), {
      status: out.status,
      headers: { 'content-type': 'application/json' }
    });
  }) as typeof fetch;
  return { fetch: impl, calls };
}

export function okFetch(payload: unknown) {
  return mockFetch(() => ({ status: 200, body: payload }));
}

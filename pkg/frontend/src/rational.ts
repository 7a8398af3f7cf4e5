/**
 * Exact rational strings for wire traffic.
 *
 * The UI never does geometry; it only snaps slider floats to a 1/256 grid
 * and formats/compares the "p/q" strings the service speaks.  bigint keeps
 * the arithmetic exact for display math (camera fitting).
 */

export interface Rat {
  readonly num: bigint;
  readonly den: bigint; // > 0
}

function gcd(a: bigint, b: bigint): bigint {
  a = a < 0n ? -a : a;
  b = b < 0n ? -b : b;
  while (b) {
    [a, b] = [b, a % b];
  }
  return a;
}

export function rat(num: bigint, den: bigint = 1n): Rat {
  if (den === 0n) throw new Error("zero denominator");
  if (den < 0n) {
    num = -num;
    den = -den;
  }
  const g = gcd(num, den) || 1n;
  return { num: num / g, den: den / g };
}

export function parseRat(s: string): Rat {
  const slash = s.indexOf("/");
  if (slash >= 0) {
    return rat(BigInt(s.slice(0, slash)), BigInt(s.slice(slash + 1)));
  }
  const dot = s.indexOf(".");
  if (dot >= 0) {
    const frac = s.length - dot - 1;
    return rat(BigInt(s.slice(0, dot) + s.slice(dot + 1)), 10n ** BigInt(frac));
  }
  return rat(BigInt(s));
}

export function formatRat(q: Rat): string {
  return q.den === 1n ? q.num.toString() : `${q.num}/${q.den}`;
}

export function ratToNumber(q: Rat): number {
  return Number(q.num) / Number(q.den);
}

export function ratEq(a: Rat, b: Rat): boolean {
  return a.num === b.num && a.den === b.den;
}

/** Snap a slider float to the exact k/256 grid and return its wire string. */
export function snapToGrid(value: number, gridDen = 256): string {
  const k = Math.round(value * gridDen);
  return formatRat(rat(BigInt(k), BigInt(gridDen)));
}

export type WirePoint = [string, string];

export function pointToXY(p: WirePoint): { x: number; y: number } {
  return { x: ratToNumber(parseRat(p[0])), y: ratToNumber(parseRat(p[1])) };
}

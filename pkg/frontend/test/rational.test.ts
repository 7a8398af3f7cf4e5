import { describe, expect, it } from "vitest";

import { formatRat, parseRat, pointToXY, rat, ratEq, ratToNumber, snapToGrid } from "../src/rational.js";

describe("rational strings", () => {
  it("parses p/q, integers and decimals exactly", () => {
    expect(parseRat("3/4")).toEqual(rat(3n, 4n));
    expect(parseRat("-7")).toEqual(rat(-7n));
    expect(parseRat("0.25")).toEqual(rat(1n, 4n));
    expect(parseRat("6/8")).toEqual(rat(3n, 4n)); // canonical form
  });

  it("formats canonically", () => {
    expect(formatRat(rat(3n, 4n))).toBe("3/4");
    expect(formatRat(rat(-10n, 5n))).toBe("-2");
    expect(formatRat(rat(0n, 9n))).toBe("0");
  });

  it("normalizes the denominator sign", () => {
    expect(rat(1n, -2n)).toEqual(rat(-1n, 2n));
    expect(ratEq(parseRat("-1/2"), rat(1n, -2n))).toBe(true);
  });

  it("snaps slider values to the 1/256 grid", () => {
    expect(snapToGrid(0.5)).toBe("1/2");
    expect(snapToGrid(0.25)).toBe("1/4");
    expect(snapToGrid(0.2501)).toBe("1/4");
    expect(snapToGrid(1 / 256)).toBe("1/256");
    expect(snapToGrid(0.333)).toBe("85/256");
    expect(snapToGrid(0)).toBe("0");
  });

  it("converts wire points for display", () => {
    expect(pointToXY(["-1/2", "3/2"])).toEqual({ x: -0.5, y: 1.5 });
    expect(ratToNumber(parseRat("13/4"))).toBeCloseTo(3.25);
  });
});

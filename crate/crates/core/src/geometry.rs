//! Exact integer plane geometry: winding numbers and signed ray crossings.

pub type Point = (i64, i64);

/// Twice the signed area of the triangle `o, a, b`.
pub fn cross(o: Point, a: Point, b: Point) -> i128 {
    let (ox, oy) = (o.0 as i128, o.1 as i128);
    (a.0 as i128 - ox) * (b.1 as i128 - oy) - (a.1 as i128 - oy) * (b.0 as i128 - ox)
}

/// Three times the centroid, so it stays on the integer lattice.
pub fn centroid3(a: Point, b: Point, c: Point) -> Point {
    (a.0 + b.0 + c.0, a.1 + b.1 + c.1)
}

/// Winding number of the closed polyline through `pts` (last joined back to
/// first) around `p`. `p` must not lie on the curve.
pub fn winding_number(pts: &[Point], p: Point) -> i64 {
    let mut w = 0;
    for i in 0..pts.len() {
        let a = pts[i];
        let b = pts[(i + 1) % pts.len()];
        if a.1 <= p.1 {
            if b.1 > p.1 && cross(a, b, p) > 0 {
                w += 1;
            }
        } else if b.1 <= p.1 && cross(a, b, p) < 0 {
            w -= 1;
        }
    }
    w
}

/// Signed number of times the open polyline `pts` crosses the vertical ray
/// going up from `p`. Left-to-right crossings count `+1`. Segment endpoints
/// are treated half-open in `x` so a crossing through a vertex counts once.
pub fn upward_ray_crossings(pts: &[Point], p: Point) -> i64 {
    let mut total = 0;
    for w in pts.windows(2) {
        let (a, b) = (w[0], w[1]);
        let (lo, hi, sign) = if a.0 < b.0 { (a, b, 1) } else { (b, a, -1) };
        if lo.0 == hi.0 || !(lo.0 <= p.0 && p.0 < hi.0) {
            continue;
        }
        // Above p when p lies to the right of lo -> hi.
        if cross(lo, hi, p) < 0 {
            total += sign;
        }
    }
    total
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn winding_of_square() {
        let sq = [(0, 0), (6, 0), (6, 6), (0, 6)];
        assert_eq!(winding_number(&sq, (3, 3)), 1);
        assert_eq!(winding_number(&sq, (9, 3)), 0);
        let rev: Vec<_> = sq.iter().rev().copied().collect();
        assert_eq!(winding_number(&rev, (3, 3)), -1);
    }

    #[test]
    fn winding_with_repeated_vertices() {
        let pts = [(0, 0), (6, 0), (6, 0), (6, 6), (0, 6), (0, 0)];
        assert_eq!(winding_number(&pts, (1, 5)), 1);
    }

    #[test]
    fn ray_crossings() {
        let line = [(-3, 3), (0, 3), (3, 3)];
        assert_eq!(upward_ray_crossings(&line, (0, 1)), 1);
        assert_eq!(upward_ray_crossings(&line, (0, 4)), 0);
        let back = [(3, 3), (-3, 3)];
        assert_eq!(upward_ray_crossings(&back, (1, 0)), -1);
        let zig = [(-3, 5), (3, 5), (-3, 6), (3, 6)];
        assert_eq!(upward_ray_crossings(&zig, (0, 0)), 1);
        assert_eq!(centroid3((0, 0), (3, 0), (0, 3)), (3, 3));
    }
}

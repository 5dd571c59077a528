//! Fan triangulations of polygons with oriented, Farey-weighted edges, and
//! the oriented paths through them.

use std::collections::BTreeMap;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::farey::{hirzebruch_convert, hirzebruch_inverse, NegativeCF, RegularCF};
use crate::geometry::{centroid3, winding_number, Point};
use crate::laurent::LaurentPoly;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Triangle {
    /// Top-row vertices first, then bottom-row, each left to right.
    pub vertices: [usize; 3],
    pub base_down: bool,
}

/// The fan triangulation attached to `a = (a1, ..., a2m)`.
///
/// Vertex `0` sits at the bottom-left, `1` at the top-left. The top row reads
/// `1, 2, ..., k+1` and the bottom row `0, n-1, n-2, ..., k+2`, both left to
/// right, where `k = a2 + a4 + ... + a2m`.
#[derive(Clone, Debug, Serialize)]
pub struct FanTriangulation {
    pub n: usize,
    pub k: usize,
    pub a: RegularCF,
    pub c: NegativeCF,
    pub top: Vec<usize>,
    pub bottom: Vec<usize>,
    pub coords: Vec<Point>,
    /// Strip order, `triangles[0]` being the leftmost one.
    pub triangles: Vec<Triangle>,
    /// Oriented edges with their Farey weight exponents. The leftmost edge
    /// `0-1` is absent.
    #[serde(serialize_with = "edge_list")]
    pub edges: BTreeMap<(usize, usize), i64>,
    #[serde(skip)]
    out: Vec<Vec<usize>>,
}

fn edge_list<S: serde::Serializer>(
    edges: &BTreeMap<(usize, usize), i64>,
    s: S,
) -> std::result::Result<S::Ok, S::Error> {
    #[derive(Serialize)]
    struct Edge {
        from: usize,
        to: usize,
        exponent: i64,
    }
    s.collect_seq(edges.iter().map(|(&(from, to), &exponent)| Edge { from, to, exponent }))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Path {
    pub vertices: Vec<usize>,
    pub coarea: u32,
    pub area: u32,
    pub weight: i64,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Statistic {
    Coarea,
    Area,
    Weight,
}

impl std::str::FromStr for Statistic {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "coarea" => Ok(Self::Coarea),
            "area" => Ok(Self::Area),
            "weight" => Ok(Self::Weight),
            _ => Err(Error::Parse(format!("unknown statistic {s:?}"))),
        }
    }
}

impl FanTriangulation {
    pub fn from_regular(a: &RegularCF) -> Self {
        build(a)
    }

    pub fn from_negative(c: &NegativeCF) -> Self {
        build(&hirzebruch_inverse(c))
    }

    /// Number of triangles incident to each vertex.
    pub fn quiddity(&self) -> Vec<usize> {
        let mut q = vec![0; self.n];
        for t in &self.triangles {
            for &v in &t.vertices {
                q[v] += 1;
            }
        }
        q
    }

    pub fn is_top(&self, v: usize) -> bool {
        (1..=self.k + 1).contains(&v)
    }

    pub fn out_neighbours(&self, v: usize) -> &[usize] {
        &self.out[v]
    }

    pub fn edge_exponent(&self, from: usize, to: usize) -> Option<i64> {
        self.edges.get(&(from, to)).copied()
    }

    fn check_vertex(&self, v: usize) -> Result<()> {
        if v >= self.n {
            return Err(Error::InvalidVertex {
                vertex: v,
                n: self.n,
                reason: "no such vertex",
            });
        }
        Ok(())
    }

    fn adjacent(&self, u: usize, v: usize) -> bool {
        self.edges.contains_key(&(u, v)) || self.edges.contains_key(&(v, u))
    }

    /// All oriented paths from `from` to `to`, with area, coarea and weight.
    /// Paths must end at `0` or `1` and start elsewhere.
    pub fn enumerate_paths(&self, from: usize, to: usize) -> Result<Vec<Path>> {
        self.check_vertex(from)?;
        self.check_vertex(to)?;
        if to > 1 {
            return Err(Error::InvalidVertex {
                vertex: to,
                n: self.n,
                reason: "paths must end at vertex 0 or 1",
            });
        }
        if from <= 1 {
            return Err(Error::InvalidVertex {
                vertex: from,
                n: self.n,
                reason: "paths must start away from vertices 0 and 1",
            });
        }
        let mut out = Vec::new();
        let mut stack = vec![from];
        self.dfs(to, &mut stack, &mut out);
        Ok(out)
    }

    fn dfs(&self, to: usize, stack: &mut Vec<usize>, out: &mut Vec<Path>) {
        let v = *stack.last().unwrap();
        if v == to {
            out.push(self.make_path(stack.clone()));
            return;
        }
        for &w in &self.out[v] {
            stack.push(w);
            self.dfs(to, stack, out);
            stack.pop();
        }
    }

    fn make_path(&self, vertices: Vec<usize>) -> Path {
        let weight = vertices
            .windows(2)
            .map(|e| self.edges[&(e[0], e[1])])
            .sum();
        let coarea = self.coarea_triangles(&vertices).len() as u32;
        let area = self.area_triangles(&vertices).len() as u32;
        Path {
            vertices,
            coarea,
            area,
            weight,
        }
    }

    /// The path followed by the boundary row back to its start: the bottom row
    /// for coarea, the top row for area.
    fn closing_curve(&self, path: &[usize], through_top: bool) -> Vec<Point> {
        let s = path[0];
        let e = *path.last().unwrap();
        let mut curve: Vec<usize> = path.to_vec();
        let row = if through_top { &self.top } else { &self.bottom };
        let on_row = |v: usize| row.contains(&v);
        let turn = if on_row(s) {
            s
        } else {
            // Leftmost vertex of the row adjacent to s.
            *row.iter().find(|&&u| self.adjacent(u, s)).unwrap()
        };
        // Step from the end vertex onto the row, then walk right to the turn.
        let first = if through_top {
            if e == 0 {
                curve.push(1);
            }
            1
        } else {
            curve.push(self.n - 1);
            2
        };
        let turn_idx = row.iter().position(|&u| u == turn).unwrap();
        if turn_idx >= first {
            curve.extend_from_slice(&row[first..=turn_idx]);
        }
        curve.iter().map(|&v| self.coords[v]).collect()
    }

    /// Indices of the triangles (other than the leftmost) enclosed by `curve`.
    fn enclosed(&self, curve: &[Point]) -> Vec<usize> {
        let scaled: Vec<Point> = curve.iter().map(|&(x, y)| (3 * x, 3 * y)).collect();
        (1..self.triangles.len())
            .filter(|&i| {
                let [a, b, c] = self.triangles[i].vertices.map(|v| self.coords[v]);
                winding_number(&scaled, centroid3(a, b, c)) != 0
            })
            .collect()
    }

    /// The triangles counted by the coarea of `path`.
    pub fn coarea_triangles(&self, path: &[usize]) -> Vec<usize> {
        self.enclosed(&self.closing_curve(path, false))
    }

    /// The triangles counted by the area of `path`.
    pub fn area_triangles(&self, path: &[usize]) -> Vec<usize> {
        self.enclosed(&self.closing_curve(path, true))
    }

    pub fn path_generating_poly(
        &self,
        from: usize,
        to: usize,
        statistic: Statistic,
    ) -> Result<LaurentPoly> {
        Ok(self
            .enumerate_paths(from, to)?
            .iter()
            .map(|p| {
                let e = match statistic {
                    Statistic::Coarea => p.coarea as i64,
                    Statistic::Area => p.area as i64,
                    Statistic::Weight => p.weight,
                };
                LaurentPoly::monomial(1, e)
            })
            .sum())
    }
}

fn build(a: &RegularCF) -> FanTriangulation {
    let seq = a.as_slice();
    let big_n: usize = seq.iter().map(|&x| x as usize).sum();
    let n = big_n + 2;
    let k: usize = seq.iter().skip(1).step_by(2).map(|&x| x as usize).sum();

    let mut top = vec![1usize];
    let mut bottom = vec![0usize];
    let mut triangles = Vec::with_capacity(big_n);
    let mut edges = BTreeMap::new();
    let mut birth = vec![usize::MAX; n];
    birth[0] = 0;
    birth[1] = 1;
    let mut born = 2;
    let mut next_top = 2;
    let mut next_bottom = n - 1;
    // Shared edge of the triangle about to be added: (top, bottom, exponent).
    let mut shared: Option<(usize, usize, i64)> = None;

    for (run, &len) in seq.iter().enumerate() {
        let base_down = run % 2 == 0;
        for _ in 0..len {
            let (tc, bc) = (*top.last().unwrap(), *bottom.last().unwrap());
            let w = if base_down {
                next_bottom -= 1;
                next_bottom + 1
            } else {
                next_top += 1;
                next_top - 1
            };
            birth[w] = born;
            born += 1;
            match shared {
                None => {
                    edges.insert((w, bc), 0);
                    edges.insert((w, tc), 0);
                }
                Some((_, _, x)) => {
                    edges.insert((w, bc), 0);
                    edges.insert((w, tc), x + 1);
                }
            }
            let vertices = if base_down {
                bottom.push(w);
                [tc, bc, w]
            } else {
                top.push(w);
                [tc, w, bc]
            };
            triangles.push(Triangle {
                vertices,
                base_down,
            });
            let (nt, nb) = (*top.last().unwrap(), *bottom.last().unwrap());
            shared = Some((nt, nb, edges[&(w, if base_down { nt } else { nb })]));
        }
    }
    debug_assert_eq!(top.last(), Some(&(k + 1)));
    debug_assert_eq!(bottom.last(), Some(&(k + 2)));

    // Every edge other than 0-1 was inserted above pointing away from the newly
    // born vertex; that is the orientation. Check it against the local rules.
    let orient = orientation_by_rules(n, k, &top, &bottom, &triangles);
    assert_eq!(
        orient.len(),
        edges.len(),
        "orientation rules and Farey replay disagree on the edge set"
    );
    for (&(u, v), _) in &edges {
        assert!(
            orient.contains(&(u, v)),
            "edge {u}->{v} contradicts the orientation rules"
        );
        assert!(birth[u] > birth[v]);
    }

    let top_len = top.len() as i64;
    let bottom_len = bottom.len() as i64;
    let mut coords = vec![(0, 0); n];
    for (j, &v) in top.iter().enumerate() {
        coords[v] = (j as i64 * (bottom_len - 1), 1);
    }
    for (t, &v) in bottom.iter().enumerate() {
        coords[v] = (t as i64 * (top_len - 1), 0);
    }

    let mut out = vec![Vec::new(); n];
    for &(u, v) in edges.keys() {
        out[u].push(v);
    }

    FanTriangulation {
        n,
        k,
        c: hirzebruch_convert(a),
        a: a.clone(),
        top,
        bottom,
        coords,
        triangles,
        edges,
        out,
    }
}

/// Orientation straight from the local rules: boundary edges leftward, the
/// rightmost edge downward, interior edges upward exactly when the triangle on
/// their left has its base down.
fn orientation_by_rules(
    n: usize,
    k: usize,
    top: &[usize],
    bottom: &[usize],
    triangles: &[Triangle],
) -> Vec<(usize, usize)> {
    let mut out = Vec::new();
    for w in top.windows(2) {
        out.push((w[1], w[0]));
    }
    for w in bottom.windows(2) {
        out.push((w[1], w[0]));
    }
    out.push((k + 1, k + 2));
    for pair in triangles.windows(2) {
        let (l, r) = (&pair[0], &pair[1]);
        let shared: Vec<usize> = l
            .vertices
            .iter()
            .copied()
            .filter(|v| r.vertices.contains(v))
            .collect();
        let (t, b) = if (1..=k + 1).contains(&shared[0]) {
            (shared[0], shared[1])
        } else {
            (shared[1], shared[0])
        };
        out.push(if l.base_down { (b, t) } else { (t, b) });
    }
    debug_assert_eq!(out.len(), 2 * n - 4);
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn fan(a: &[i64]) -> FanTriangulation {
        FanTriangulation::from_regular(&RegularCF::new(a.to_vec()).unwrap())
    }

    fn p(s: &str) -> LaurentPoly {
        s.parse().unwrap()
    }

    fn sorted(mut v: Vec<u32>) -> Vec<u32> {
        v.sort();
        v
    }

    #[test]
    fn heptagon_structure() {
        let t = fan(&[1, 2, 1, 1]);
        assert_eq!(t.n, 7);
        assert_eq!(t.k, 3);
        assert_eq!(t.c.as_slice(), &[2, 2, 3]);
        assert_eq!(t.quiddity(), vec![1, 2, 2, 3, 1, 2, 4]);
        assert_eq!(t.top, vec![1, 2, 3, 4]);
        assert_eq!(t.bottom, vec![0, 6, 5]);
        let expected: BTreeMap<(usize, usize), i64> = [
            ((2, 1), 1),
            ((2, 6), 0),
            ((3, 2), 1),
            ((3, 6), 0),
            ((5, 6), 0),
            ((5, 3), 1),
            ((4, 5), 0),
            ((4, 3), 2),
            ((6, 0), 0),
            ((6, 1), 0),
        ]
        .into_iter()
        .collect();
        assert_eq!(t.edges, expected);
    }

    #[test]
    fn negative_input_gives_same_fan() {
        let t = FanTriangulation::from_negative(&NegativeCF::new(vec![2, 2, 3]).unwrap());
        assert_eq!(t.a.as_slice(), &[1, 2, 1, 1]);
        assert_eq!(t.edges, fan(&[1, 2, 1, 1]).edges);
    }

    #[test]
    fn square() {
        let t = fan(&[1, 1]);
        assert_eq!(t.n, 4);
        assert_eq!(t.triangles.len(), 2);
        assert_eq!(t.enumerate_paths(2, 1).unwrap().len(), 2);
    }

    #[test]
    fn heptagon_paths_to_zero() {
        let t = fan(&[1, 2, 1, 1]);
        let paths = t.enumerate_paths(4, 0).unwrap();
        assert_eq!(paths.len(), 5);
        assert_eq!(
            sorted(paths.iter().map(|p| p.coarea).collect()),
            vec![0, 1, 2, 2, 3]
        );
        assert_eq!(
            t.path_generating_poly(4, 0, Statistic::Coarea).unwrap(),
            p("1 + q + 2*q^2 + q^3")
        );
    }

    #[test]
    fn heptagon_paths_to_one() {
        let t = fan(&[1, 2, 1, 1]);
        let paths = t.enumerate_paths(4, 1).unwrap();
        assert_eq!(paths.len(), 7);
        assert_eq!(
            sorted(paths.iter().map(|p| p.coarea).collect()),
            vec![0, 1, 2, 2, 3, 3, 4]
        );
        for path in &paths {
            assert_eq!(path.weight, path.coarea as i64, "{:?}", path.vertices);
            assert_eq!(path.area + path.coarea, 4, "{:?}", path.vertices);
        }
    }

    #[test]
    fn path_endpoint_validation() {
        let t = fan(&[1, 1]);
        assert!(t.enumerate_paths(2, 3).is_err());
        assert!(t.enumerate_paths(1, 0).is_err());
        assert!(t.enumerate_paths(9, 0).is_err());
        assert!("volume".parse::<Statistic>().is_err());
    }
}

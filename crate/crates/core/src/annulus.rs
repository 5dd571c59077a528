//! Triangulated annuli glued from fan triangulations, their closed loops,
//! matchings and dual-graph closures.
//!
//! Geometry is done in the universal cover: a horizontal strip with the inner
//! boundary on `y = 1` and the outer boundary on `y = 0`. Inner vertex `i`
//! sits at `x = i * l` and outer vertex `t` at `x = t * k` (`k` inner and `l`
//! outer marked points), so one turn around the annulus is a translation by
//! `P = k * l`.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::cycles::simple_cycles;
use crate::error::{Error, Result};
use crate::farey::{hirzebruch_convert, NegativeCF, RegularCF};
use crate::geometry::{centroid3, cross, upward_ray_crossings, Point};
use crate::laurent::LaurentPoly;
use crate::polygon::{FanTriangulation, Statistic};
use crate::qcore::Mat2;

/// Largest triangle count for which closures are listed one by one.
pub const CLOSURE_LISTING_MAX: usize = 20;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum AnnulusKind {
    Plus,
    Minus,
}

impl FromStr for AnnulusKind {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "plus" | "+" => Ok(Self::Plus),
            "minus" | "-" => Ok(Self::Minus),
            _ => Err(Error::Parse(format!("unknown annulus kind {s:?}"))),
        }
    }
}

impl fmt::Display for AnnulusKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Self::Plus => "plus",
            Self::Minus => "minus",
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum Node {
    Inner(usize),
    Outer(usize),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Arc {
    pub from: Node,
    pub to: Node,
    /// Number of turns made by the lift of the arc (`-1`, `0` or `1`).
    pub shift: i64,
    /// The fan edge this arc comes from.
    pub fan_edge: (usize, usize),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AnnulusTriangle {
    pub fan_index: usize,
    pub corners: [Node; 3],
    pub cover: [Point; 3],
}

#[derive(Clone, Debug, Serialize)]
pub struct AnnulusTriangulation {
    pub kind: AnnulusKind,
    pub seq: Vec<i64>,
    /// Number of inner marked points.
    pub k: usize,
    /// Number of outer marked points.
    pub l: usize,
    pub period: i64,
    pub inner_labels: Vec<usize>,
    pub outer_labels: Vec<usize>,
    pub arcs: Vec<Arc>,
    pub triangles: Vec<AnnulusTriangle>,
    #[serde(skip)]
    pub fan: FanTriangulation,
    /// Fan vertex to (node, number of turns); `None` for the removed vertex.
    #[serde(skip)]
    pub vertex_map: Vec<Option<(Node, i64)>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Loop {
    /// Indices into `arcs`, in travel order.
    pub arcs: Vec<usize>,
    /// Labels of the visited vertices, starting at the tail of the first arc.
    pub vertices: Vec<usize>,
    pub area: u32,
    pub coarea: u32,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum LoopStatistic {
    Area,
    Coarea,
}

impl FromStr for LoopStatistic {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "area" => Ok(Self::Area),
            "coarea" => Ok(Self::Coarea),
            _ => Err(Error::Parse(format!("unknown loop statistic {s:?}"))),
        }
    }
}

/// A choice of one corner at each inner vertex `1..k`, all in distinct
/// triangles.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Matching {
    pub triangles: Vec<usize>,
    pub corners: Vec<usize>,
}

/// `a, b, ..., z`, then `t26, t27, ...`.
pub fn triangle_label(i: usize) -> String {
    if i < 26 {
        ((b'a' + i as u8) as char).to_string()
    } else {
        format!("t{i}")
    }
}

impl AnnulusTriangulation {
    /// `T+(a)`: the whole fan with the leftmost edge glued onto the rightmost.
    pub fn plus(a: &RegularCF) -> Result<Self> {
        let fan = FanTriangulation::from_regular(a);
        let k = fan.k;
        let l = fan.n - k - 2;
        let mut vertex_map = vec![None; fan.n];
        map_top(&fan, &mut vertex_map);
        map_bottom(&fan.bottom, l, &mut vertex_map);
        let arcs_from: Vec<(usize, usize)> = fan.edges.keys().copied().collect();
        let tri_idx: Vec<usize> = (0..fan.triangles.len()).collect();
        let outer_labels = std::iter::once(k + 2)
            .chain(fan.bottom[1..l].iter().copied())
            .collect();
        Self::assemble(AnnulusKind::Plus, a.as_slice().to_vec(), fan, k, l, vertex_map, &arcs_from, &tri_idx, outer_labels)
    }

    /// `T-(c)`: the fan of the same rational with its leftmost triangle glued
    /// onto its rightmost one.
    pub fn minus(c: &NegativeCF) -> Result<Self> {
        let fan = FanTriangulation::from_negative(c);
        let k = fan.k;
        if fan.n < k + 4 {
            return Err(Error::DegenerateAnnulus(format!(
                "{:?} leaves no outer marked point after gluing",
                c.as_slice()
            )));
        }
        let l = fan.n - k - 3;
        let mut vertex_map = vec![None; fan.n];
        map_top(&fan, &mut vertex_map);
        map_bottom(&fan.bottom[1..], l, &mut vertex_map);
        let n = fan.n;
        let arcs_from: Vec<(usize, usize)> = fan
            .edges
            .keys()
            .copied()
            .filter(|&(u, v)| !(u == n - 1 && (v == 0 || v == 1)))
            .collect();
        let tri_idx: Vec<usize> = (1..fan.triangles.len()).collect();
        let outer_labels = std::iter::once(k + 2)
            .chain(fan.bottom[2..l + 1].iter().copied())
            .collect();
        Self::assemble(AnnulusKind::Minus, c.as_slice().to_vec(), fan, k, l, vertex_map, &arcs_from, &tri_idx, outer_labels)
    }

    pub fn build(kind: AnnulusKind, seq: &[i64]) -> Result<Self> {
        match kind {
            AnnulusKind::Plus => Self::plus(&RegularCF::new(seq.to_vec())?),
            AnnulusKind::Minus => Self::minus(&NegativeCF::new(seq.to_vec())?),
        }
    }

    #[allow(clippy::too_many_arguments)]
    fn assemble(
        kind: AnnulusKind,
        seq: Vec<i64>,
        fan: FanTriangulation,
        k: usize,
        l: usize,
        vertex_map: Vec<Option<(Node, i64)>>,
        arcs_from: &[(usize, usize)],
        tri_idx: &[usize],
        outer_labels: Vec<usize>,
    ) -> Result<Self> {
        let period = (k * l) as i64;
        let mut me = Self {
            kind,
            seq,
            k,
            l,
            period,
            inner_labels: (1..=k).collect(),
            outer_labels,
            arcs: Vec::new(),
            triangles: Vec::new(),
            fan,
            vertex_map,
        };
        for &(u, v) in arcs_from {
            let (nu, ou) = me.vertex_map[u].unwrap();
            let (nv, ov) = me.vertex_map[v].unwrap();
            me.arcs.push(Arc {
                from: nu,
                to: nv,
                shift: ov - ou,
                fan_edge: (u, v),
            });
        }
        for &ti in tri_idx {
            let vs = me.fan.triangles[ti].vertices;
            let corners = vs.map(|v| me.vertex_map[v].unwrap().0);
            let cover = vs.map(|v| {
                let (node, off) = me.vertex_map[v].unwrap();
                me.position(node, off)
            });
            me.triangles.push(AnnulusTriangle {
                fan_index: ti,
                corners,
                cover,
            });
        }
        Ok(me)
    }

    /// Cover coordinates of `node` after `turns` periods.
    pub fn position(&self, node: Node, turns: i64) -> Point {
        match node {
            Node::Inner(i) => (i as i64 * self.l as i64 + turns * self.period, 1),
            Node::Outer(t) => (t as i64 * self.k as i64 + turns * self.period, 0),
        }
    }

    pub fn label(&self, node: Node) -> usize {
        match node {
            Node::Inner(i) => self.inner_labels[i],
            Node::Outer(t) => self.outer_labels[t],
        }
    }

    fn node_index(&self, node: Node) -> usize {
        match node {
            Node::Inner(i) => i,
            Node::Outer(t) => self.k + t,
        }
    }

    fn index_node(&self, i: usize) -> Node {
        if i < self.k {
            Node::Inner(i)
        } else {
            Node::Outer(i - self.k)
        }
    }

    /// Triangle corners at each inner vertex.
    pub fn inner_quiddity(&self) -> Vec<usize> {
        let mut q = vec![0; self.k];
        for t in &self.triangles {
            for c in t.corners {
                if let Node::Inner(i) = c {
                    q[i] += 1;
                }
            }
        }
        q
    }

    /// Every simple directed cycle of arcs, with its area and coarea.
    pub fn enumerate_loops(&self) -> Result<Vec<Loop>> {
        let nv = self.k + self.l;
        let mut parallel: BTreeMap<(usize, usize), Vec<usize>> = BTreeMap::new();
        let mut out = Vec::new();
        for (i, arc) in self.arcs.iter().enumerate() {
            let (u, v) = (self.node_index(arc.from), self.node_index(arc.to));
            if u == v {
                out.push(self.make_loop(vec![i])?);
            } else {
                parallel.entry((u, v)).or_default().push(i);
            }
        }
        let mut adj = vec![Vec::new(); nv];
        for &(u, v) in parallel.keys() {
            adj[u].push(v);
        }
        for cycle in simple_cycles(&adj) {
            let choices: Vec<&Vec<usize>> = (0..cycle.len())
                .map(|i| &parallel[&(cycle[i], cycle[(i + 1) % cycle.len()])])
                .collect();
            let mut pick = vec![0usize; choices.len()];
            loop {
                let arcs = pick.iter().zip(&choices).map(|(&p, c)| c[p]).collect();
                out.push(self.make_loop(arcs)?);
                let mut i = 0;
                while i < pick.len() {
                    pick[i] += 1;
                    if pick[i] < choices[i].len() {
                        break;
                    }
                    pick[i] = 0;
                    i += 1;
                }
                if i == pick.len() {
                    break;
                }
            }
        }
        Ok(out)
    }

    fn make_loop(&self, arcs: Vec<usize>) -> Result<Loop> {
        let vertices: Vec<usize> = arcs.iter().map(|&i| self.label(self.arcs[i].from)).collect();
        let coarea = self.below(&arcs)?.len() as u32;
        Ok(Loop {
            arcs,
            vertices,
            area: self.triangles.len() as u32 - coarea,
            coarea,
        })
    }

    /// The triangles counted by the coarea of a loop: those between the loop
    /// and the outer boundary.
    pub fn coarea_triangles(&self, lp: &Loop) -> Result<Vec<usize>> {
        self.below(&lp.arcs)
    }

    fn below(&self, arcs: &[usize]) -> Result<Vec<usize>> {
        let turns: i64 = arcs.iter().map(|&i| self.arcs[i].shift).sum();
        if turns.abs() != 1 {
            let vertices: Vec<usize> = arcs.iter().map(|&i| self.label(self.arcs[i].from)).collect();
            return Err(Error::ModelViolation(if turns == 0 {
                format!("contractible oriented loop through {vertices:?}")
            } else {
                format!("loop through {vertices:?} winds {turns} times")
            }));
        }
        // One lift of the loop.
        let mut lift = Vec::with_capacity(arcs.len() + 1);
        let mut at = 0i64;
        lift.push(self.position(self.arcs[arcs[0]].from, 0));
        for &i in arcs {
            at += self.arcs[i].shift;
            lift.push(self.position(self.arcs[i].to, at));
        }
        // Translates of the lift that can reach the fundamental domain
        // 0 <= x <= P, plus one spare on each side.
        let p = self.period;
        let lo_x = lift.iter().map(|q| q.0).min().unwrap();
        let hi_x = lift.iter().map(|q| q.0).max().unwrap();
        let j_lo = (-hi_x).div_euclid(p) - 1;
        let j_hi = (p - lo_x).div_euclid(p) + 1;
        let (m_lo, m_hi) = if turns > 0 { (j_lo, j_hi) } else { (-j_hi, -j_lo) };
        let mut curve = Vec::with_capacity((m_hi - m_lo + 1) as usize * lift.len());
        for m in m_lo..=m_hi {
            let dx = m * turns * p;
            let from = if curve.is_empty() { 0 } else { 1 };
            curve.extend(lift[from..].iter().map(|&(x, y)| (3 * (x + dx), 3 * y)));
        }
        Ok((0..self.triangles.len())
            .filter(|&i| {
                let [a, b, c] = self.triangles[i].cover;
                upward_ray_crossings(&curve, centroid3(a, b, c)) != 0
            })
            .collect())
    }

    pub fn loop_generating_poly(&self, statistic: LoopStatistic) -> Result<LaurentPoly> {
        Ok(self
            .enumerate_loops()?
            .iter()
            .map(|lp| {
                LaurentPoly::monomial(
                    1,
                    match statistic {
                        LoopStatistic::Area => lp.area as i64,
                        LoopStatistic::Coarea => lp.coarea as i64,
                    },
                )
            })
            .sum())
    }

    /// `q * sum over paths k+1 -> 1` plus `sum over paths k+2 -> 0` of
    /// `q^coarea`, taken on the source fan.
    pub fn loop_poly_via_paths(&self) -> Result<LaurentPoly> {
        self.require(AnnulusKind::Plus)?;
        let k = self.fan.k;
        let through_one = self.fan.path_generating_poly(k + 1, 1, Statistic::Coarea)?;
        let avoiding = self.fan.path_generating_poly(k + 2, 0, Statistic::Coarea)?;
        Ok(through_one.shift(1) + avoiding)
    }

    fn require(&self, kind: AnnulusKind) -> Result<()> {
        if self.kind != kind {
            return Err(Error::WrongAnnulusKind {
                expected: match kind {
                    AnnulusKind::Plus => "plus",
                    AnnulusKind::Minus => "minus",
                },
            });
        }
        Ok(())
    }

    /// All matchings: corners at inner vertices `1..k` in distinct triangles.
    pub fn matchings(&self) -> Result<Vec<Matching>> {
        self.require(AnnulusKind::Minus)?;
        let mut out = Vec::new();
        let mut used = vec![false; self.triangles.len()];
        let mut cur = Matching {
            triangles: Vec::new(),
            corners: Vec::new(),
        };
        self.match_from(0, &mut used, &mut cur, &mut out);
        Ok(out)
    }

    fn match_from(&self, i: usize, used: &mut [bool], cur: &mut Matching, out: &mut Vec<Matching>) {
        if i == self.k {
            out.push(cur.clone());
            return;
        }
        for (ti, t) in self.triangles.iter().enumerate() {
            if used[ti] {
                continue;
            }
            for (ci, &c) in t.corners.iter().enumerate() {
                if c != Node::Inner(i) {
                    continue;
                }
                used[ti] = true;
                cur.triangles.push(ti);
                cur.corners.push(ci);
                self.match_from(i + 1, used, cur, out);
                cur.triangles.pop();
                cur.corners.pop();
                used[ti] = false;
            }
        }
    }

    pub fn count_matchings(&self) -> Result<usize> {
        Ok(self.matchings()?.len())
    }

    /// Readable form of a matching, e.g. `(d,a,b)`. A corner index is appended
    /// when a triangle meets the vertex more than once.
    pub fn matching_label(&self, m: &Matching) -> String {
        let parts: Vec<String> = m
            .triangles
            .iter()
            .zip(&m.corners)
            .enumerate()
            .map(|(i, (&t, &c))| {
                let tri = &self.triangles[t];
                let hits = tri.corners.iter().filter(|&&x| x == Node::Inner(i)).count();
                if hits > 1 {
                    format!("{}{}", triangle_label(t), c)
                } else {
                    triangle_label(t)
                }
            })
            .collect();
        format!("({})", parts.join(","))
    }

    /// Dual edges between cyclically consecutive triangles, each crossing the
    /// shared arc from its left side to its right side. Entry `i` joins
    /// triangles `i` and `i + 1 mod N`.
    pub fn dual_edges(&self) -> Result<Vec<(usize, usize)>> {
        self.require(AnnulusKind::Plus)?;
        let nt = self.triangles.len();
        let mut out = Vec::with_capacity(nt);
        for i in 0..nt {
            let j = (i + 1) % nt;
            let ti = &self.triangles[i];
            // Bring triangle j next to triangle i in the cover.
            let dx = if j == 0 { self.period } else { 0 };
            let tj: Vec<Point> = self.triangles[j].cover.iter().map(|&(x, y)| (x + dx, y)).collect();
            let shared: Vec<Point> = ti.cover.iter().copied().filter(|p| tj.contains(p)).collect();
            if shared.len() != 2 {
                return Err(Error::ModelViolation(format!(
                    "triangles {i} and {j} do not share an arc"
                )));
            }
            let fan_edge = if j == 0 {
                (self.fan.k + 1, self.fan.k + 2)
            } else {
                self.shared_fan_edge(i, j)
            };
            let (tail, head) = self.oriented_cover_edge(fan_edge, &shared);
            let apex_i = *ti.cover.iter().find(|p| !shared.contains(p)).unwrap();
            if cross(tail, head, apex_i) > 0 {
                out.push((i, j));
            } else {
                out.push((j, i));
            }
        }
        Ok(out)
    }

    fn shared_fan_edge(&self, i: usize, j: usize) -> (usize, usize) {
        let vi = self.fan.triangles[self.triangles[i].fan_index].vertices;
        let vj = self.fan.triangles[self.triangles[j].fan_index].vertices;
        let common: Vec<usize> = vi.iter().copied().filter(|v| vj.contains(v)).collect();
        (common[0], common[1])
    }

    /// Tail and head of the arc lying on `shared`, using the fan orientation.
    fn oriented_cover_edge(&self, (u, v): (usize, usize), shared: &[Point]) -> (Point, Point) {
        let a = if self.fan.edges.contains_key(&(u, v)) { u } else { v };
        let pa = {
            let (node, off) = self.vertex_map[a].unwrap();
            self.position(node, off)
        };
        if shared[0] == pa {
            (shared[0], shared[1])
        } else if shared[1] == pa {
            (shared[1], shared[0])
        } else {
            // Fan vertex seen one period away in the glued pair.
            let same_x = |p: &Point| (p.0 - pa.0).rem_euclid(self.period) == 0 && p.1 == pa.1;
            if same_x(&shared[0]) {
                (shared[0], shared[1])
            } else {
                (shared[1], shared[0])
            }
        }
    }

    /// Sum of `q^|C|` over node sets `C` of the cyclic dual graph that contain
    /// the tail of every dual edge whose head they contain.
    pub fn closure_generating_poly(&self) -> Result<LaurentPoly> {
        let edges = self.dual_edges()?;
        let nt = self.triangles.len();
        let mut m = Mat2::identity();
        for (i, &(from, _)) in edges.iter().enumerate() {
            let forward = from == i;
            // x: membership of triangle i, y: of triangle i + 1.
            let allowed = |x: bool, y: bool| if forward { !(y && !x) } else { !(x && !y) };
            let entry = |x, y| {
                if !allowed(x, y) {
                    LaurentPoly::zero()
                } else if y {
                    LaurentPoly::q()
                } else {
                    LaurentPoly::one()
                }
            };
            let t = Mat2::new(entry(false, false), entry(false, true), entry(true, false), entry(true, true));
            m = &m * &t;
        }
        debug_assert_eq!(edges.len(), nt);
        Ok(m.trace())
    }

    /// Closures as bitmasks over triangle indices; only for up to
    /// [`CLOSURE_LISTING_MAX`] triangles.
    pub fn closures(&self) -> Result<Vec<u32>> {
        let edges = self.dual_edges()?;
        let nt = self.triangles.len();
        if nt > CLOSURE_LISTING_MAX {
            return Err(Error::TooLong {
                max: CLOSURE_LISTING_MAX,
                got: nt,
            });
        }
        Ok((0u32..1 << nt)
            .filter(|&c| {
                edges
                    .iter()
                    .all(|&(u, v)| c & (1 << v) == 0 || c & (1 << u) != 0)
            })
            .collect())
    }

    /// Same cyclic arrangement of arcs up to rotating each boundary.
    pub fn is_isomorphic(&self, other: &Self) -> bool {
        if (self.k, self.l, self.triangles.len(), self.arcs.len())
            != (other.k, other.l, other.triangles.len(), other.arcs.len())
        {
            return false;
        }
        let target = sorted_arcs(other.arcs.iter().map(|a| (a.from, a.to)));
        let corners_target = sorted_triangles(other.triangles.iter().map(|t| t.corners));
        (0..self.k).any(|r| {
            (0..self.l).any(|s| {
                let rot = |n: Node| match n {
                    Node::Inner(i) => Node::Inner((i + r) % self.k),
                    Node::Outer(t) => Node::Outer((t + s) % self.l),
                };
                sorted_arcs(self.arcs.iter().map(|a| (rot(a.from), rot(a.to)))) == target
                    && sorted_triangles(self.triangles.iter().map(|t| t.corners.map(rot)))
                        == corners_target
            })
        })
    }

    /// Vertex count per node; handy for rendering.
    pub fn node_count(&self) -> usize {
        self.k + self.l
    }

    pub fn nodes(&self) -> impl Iterator<Item = Node> + '_ {
        (0..self.node_count()).map(|i| self.index_node(i))
    }

    /// The negative sequence of the same fan.
    pub fn fan_c(&self) -> NegativeCF {
        hirzebruch_convert(&self.fan.a)
    }
}

fn sorted_arcs(it: impl Iterator<Item = (Node, Node)>) -> Vec<(Node, Node)> {
    let mut v: Vec<_> = it.collect();
    v.sort();
    v
}

fn sorted_triangles(it: impl Iterator<Item = [Node; 3]>) -> Vec<[Node; 3]> {
    let mut v: Vec<_> = it
        .map(|mut c| {
            c.sort();
            c
        })
        .collect();
    v.sort();
    v
}

fn map_top(fan: &FanTriangulation, map: &mut [Option<(Node, i64)>]) {
    for i in 1..=fan.k {
        map[i] = Some((Node::Inner(i - 1), 0));
    }
    map[fan.k + 1] = Some((Node::Inner(0), 1));
}

/// `row` lists the surviving bottom vertices left to right; its last entry
/// (`k+2`) is the first one seen a period later.
fn map_bottom(row: &[usize], l: usize, map: &mut [Option<(Node, i64)>]) {
    debug_assert_eq!(row.len(), l + 1);
    for (t, &v) in row.iter().enumerate().take(l) {
        map[v] = Some((Node::Outer(t), 0));
    }
    map[row[l]] = Some((Node::Outer(0), 1));
}

/// Convenience: `T-(c1 + 1, c2, ..., ck)` for the `c` of `a`.
pub fn minus_partner_of_plus(a: &RegularCF) -> Result<AnnulusTriangulation> {
    let mut c = hirzebruch_convert(a).as_slice().to_vec();
    c[0] += 1;
    AnnulusTriangulation::minus(&NegativeCF::new(c)?)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> LaurentPoly {
        s.parse().unwrap()
    }

    fn plus(a: &[i64]) -> AnnulusTriangulation {
        AnnulusTriangulation::build(AnnulusKind::Plus, a).unwrap()
    }

    fn minus(c: &[i64]) -> AnnulusTriangulation {
        AnnulusTriangulation::build(AnnulusKind::Minus, c).unwrap()
    }

    #[test]
    fn sizes() {
        let m = minus(&[2, 2, 3]);
        assert_eq!((m.k, m.l, m.triangles.len()), (3, 1, 4));
        assert_eq!(m.inner_quiddity(), vec![2, 2, 3]);
        let pl = plus(&[1, 2, 1, 1]);
        assert_eq!(pl.triangles.len(), 5);
        assert_eq!(pl.k, 3);
    }

    #[test]
    fn minus_two_two_three_loops() {
        let m = minus(&[2, 2, 3]);
        let loops = m.enumerate_loops().unwrap();
        assert_eq!(loops.len(), 5);
        let mut co: Vec<u32> = loops.iter().map(|l| l.coarea).collect();
        co.sort();
        assert_eq!(co, vec![0, 1, 2, 3, 4]);
        for lp in &loops {
            assert_eq!(lp.area + lp.coarea, 4);
        }
        assert_eq!(
            m.loop_generating_poly(LoopStatistic::Area).unwrap(),
            p("1 + q + q^2 + q^3 + q^4")
        );
    }

    #[test]
    fn plus_loops() {
        let pl = plus(&[1, 2, 1, 1]);
        assert_eq!(pl.enumerate_loops().unwrap().len(), 10);
        let r = p("1 + 2*q + 2*q^2 + 2*q^3 + 2*q^4 + q^5");
        assert_eq!(pl.loop_generating_poly(LoopStatistic::Coarea).unwrap(), r);
        assert_eq!(pl.loop_generating_poly(LoopStatistic::Area).unwrap(), r);
        assert_eq!(pl.loop_poly_via_paths().unwrap(), r);
        let small = plus(&[1, 1]);
        assert_eq!(small.loop_poly_via_paths().unwrap(), p("1 + q + q^2"));
        assert_eq!(
            small.loop_generating_poly(LoopStatistic::Coarea).unwrap(),
            p("1 + q + q^2")
        );
    }

    #[test]
    fn smallest_minus_cases() {
        assert!(matches!(
            AnnulusTriangulation::build(AnnulusKind::Minus, &[2]),
            Err(Error::DegenerateAnnulus(_))
        ));
        assert!(AnnulusTriangulation::build(AnnulusKind::Minus, &[2, 2]).is_err());
        let t = minus(&[3]);
        assert_eq!(t.loop_generating_poly(LoopStatistic::Coarea).unwrap(), p("1 + q + q^2"));
        assert_eq!(t.count_matchings().unwrap(), 3);
    }

    #[test]
    fn matchings_of_two_two_three() {
        let m = minus(&[2, 2, 3]);
        let listing: Vec<String> = m
            .matchings()
            .unwrap()
            .iter()
            .map(|x| m.matching_label(x))
            .collect();
        let mut got = listing.clone();
        got.sort();
        assert_eq!(got, vec!["(a,b,c)", "(a,b,d)", "(d,a,b)", "(d,a,c)", "(d,b,c)"]);
        assert!(plus(&[1, 1]).count_matchings().is_err());
    }

    #[test]
    fn closures_small() {
        let t = plus(&[1, 1]);
        assert_eq!(t.dual_edges().unwrap(), vec![(0, 1), (0, 1)]);
        assert_eq!(t.closures().unwrap(), vec![0b00, 0b01, 0b11]);
        assert_eq!(t.closure_generating_poly().unwrap(), p("1 + q + q^2"));
        let big = plus(&[1, 2, 1, 1]);
        assert_eq!(
            big.closure_generating_poly().unwrap(),
            p("1 + 2*q + 2*q^2 + 2*q^3 + 2*q^4 + q^5")
        );
        assert!(minus(&[2, 2, 3]).closure_generating_poly().is_err());
    }

    #[test]
    fn plus_is_minus_with_bumped_first_term() {
        let pl = plus(&[1, 2, 1, 1]);
        let mi = minus(&[3, 2, 3]);
        assert!(pl.is_isomorphic(&mi));
        assert!(pl.is_isomorphic(&minus(&[2, 3, 3])));
        assert!(!pl.is_isomorphic(&minus(&[2, 2, 4])));
        assert!(minus_partner_of_plus(&pl.fan.a).unwrap().is_isomorphic(&pl));
    }
}

//! Johnson's algorithm for the elementary circuits of a simple digraph.

/// All elementary cycles of the digraph with adjacency lists `adj`. Self-loops
/// are ignored. Each cycle starts at its smallest vertex.
pub fn simple_cycles(adj: &[Vec<usize>]) -> Vec<Vec<usize>> {
    let n = adj.len();
    let mut out = Vec::new();
    for s in 0..n {
        // Restrict to the subgraph on vertices >= s.
        let mut st = State {
            blocked: vec![false; n],
            b: vec![Vec::new(); n],
            stack: Vec::new(),
        };
        circuit(adj, s, s, &mut st, &mut out);
    }
    out
}

struct State {
    blocked: Vec<bool>,
    b: Vec<Vec<usize>>,
    stack: Vec<usize>,
}

fn unblock(u: usize, st: &mut State) {
    st.blocked[u] = false;
    while let Some(w) = st.b[u].pop() {
        if st.blocked[w] {
            unblock(w, st);
        }
    }
}

fn circuit(adj: &[Vec<usize>], v: usize, s: usize, st: &mut State, out: &mut Vec<Vec<usize>>) -> bool {
    let mut found = false;
    st.stack.push(v);
    st.blocked[v] = true;
    for &w in &adj[v] {
        if w < s || w == v {
            continue;
        }
        if w == s {
            out.push(st.stack.clone());
            found = true;
        } else if !st.blocked[w] && circuit(adj, w, s, st, out) {
            found = true;
        }
    }
    if found {
        unblock(v, st);
    } else {
        for &w in &adj[v] {
            if w >= s && w != v && !st.b[w].contains(&v) {
                st.b[w].push(v);
            }
        }
    }
    st.stack.pop();
    found
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn brute_force(adj: &[Vec<usize>]) -> Vec<Vec<usize>> {
        fn go(adj: &[Vec<usize>], s: usize, path: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
            let v = *path.last().unwrap();
            for &w in &adj[v] {
                if w == s && path.len() >= 1 && w != v {
                    out.push(path.clone());
                } else if w > s && !path.contains(&w) {
                    path.push(w);
                    go(adj, s, path, out);
                    path.pop();
                }
            }
        }
        let mut out = Vec::new();
        for s in 0..adj.len() {
            go(adj, s, &mut vec![s], &mut out);
        }
        out
    }

    fn canon(mut v: Vec<Vec<usize>>) -> Vec<Vec<usize>> {
        v.sort();
        v
    }

    #[test]
    fn triangle_and_two_cycle() {
        let adj = vec![vec![1], vec![2, 0], vec![0]];
        assert_eq!(canon(simple_cycles(&adj)), vec![vec![0, 1], vec![0, 1, 2]]);
    }

    #[test]
    fn complete_graph_on_four() {
        let adj: Vec<Vec<usize>> = (0..4)
            .map(|i| (0..4).filter(|&j| j != i).collect())
            .collect();
        // 6 two-cycles + 8 three-cycles + 6 four-cycles.
        assert_eq!(simple_cycles(&adj).len(), 20);
    }

    proptest! {
        #[test]
        fn agrees_with_brute_force(edges in proptest::collection::vec((0usize..6, 0usize..6), 0..18)) {
            let mut adj = vec![Vec::new(); 6];
            for (u, v) in edges {
                if !adj[u].contains(&v) {
                    adj[u].push(v);
                }
            }
            prop_assert_eq!(canon(simple_cycles(&adj)), canon(brute_force(&adj)));
        }
    }
}

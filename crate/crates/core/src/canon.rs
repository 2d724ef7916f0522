//! Exact canonical labeling for small graphs.
//!
//! Vertices are first split into label-invariant color classes by iterated
//! color refinement (degree, then the multiset of neighbor colors). The
//! canonical labeling is the one, among all labelings that list the color
//! classes in order, whose upper-triangle adjacency string is
//! lexicographically least. The string is read in graph6 column order
//! `a(0,1), a(0,2), a(1,2), a(0,3), ...` so that the first `k(k-1)/2` bits
//! depend only on the first `k` placed vertices and a partial labeling can be
//! discarded as soon as its prefix exceeds the best one seen.

use std::cmp::Ordering;
use std::fmt;

use crate::graph::{Graph, VertexSet};

/// Isomorphism-invariant key: the order plus the packed adjacency bits of the
/// canonical relabeling. Equal forms mean isomorphic graphs.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CanonicalForm {
    n: u8,
    bits: Vec<u8>,
}

impl CanonicalForm {
    pub fn order(&self) -> usize {
        self.n as usize
    }

    /// Upper-triangle bits in column order, packed most significant bit first.
    pub fn bits(&self) -> &[u8] {
        &self.bits
    }

    /// Rebuilds the canonical representative.
    pub fn to_graph(&self) -> Graph {
        let n = self.order();
        let mut adj = vec![VertexSet::EMPTY; n];
        let mut k = 0;
        for j in 1..n {
            for i in 0..j {
                if self.bits[k / 8] >> (7 - k % 8) & 1 == 1 {
                    adj[i].insert(j);
                    adj[j].insert(i);
                }
                k += 1;
            }
        }
        Graph::from_adjacency(adj)
    }
}

impl fmt::Debug for CanonicalForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CanonicalForm(n={}, ", self.n)?;
        for b in &self.bits {
            write!(f, "{b:02x}")?;
        }
        write!(f, ")")
    }
}

/// Color classes from iterated refinement. Colors are ranks of sorted
/// signatures, so they do not depend on the input labeling.
pub fn refined_colors(g: &Graph) -> Vec<usize> {
    let n = g.order();
    let mut colors: Vec<usize> = (0..n).map(|v| g.degree(v)).collect();
    let mut classes = count_distinct(&colors);
    loop {
        let signatures: Vec<(usize, Vec<usize>)> = (0..n)
            .map(|v| {
                let mut nb: Vec<usize> = g.neighbors(v).iter().map(|u| colors[u]).collect();
                nb.sort_unstable();
                (colors[v], nb)
            })
            .collect();
        let mut distinct = signatures.clone();
        distinct.sort();
        distinct.dedup();
        let next: Vec<usize> = signatures
            .iter()
            .map(|s| distinct.binary_search(s).unwrap())
            .collect();
        let next_classes = distinct.len();
        colors = next;
        if next_classes == classes {
            return colors;
        }
        classes = next_classes;
    }
}

fn count_distinct(xs: &[usize]) -> usize {
    let mut v = xs.to_vec();
    v.sort_unstable();
    v.dedup();
    v.len()
}

struct Search<'a> {
    g: &'a Graph,
    /// Color class each position must be filled from.
    slot_color: Vec<usize>,
    class_members: Vec<VertexSet>,
    placed: Vec<usize>,
    columns: Vec<u64>,
    best_columns: Vec<u64>,
    best_placed: Vec<usize>,
    have_best: bool,
}

/// Orders two columns the way their bits appear in the form: bit `i` of a
/// column is `a(i, k)`, compared from `i = 0` upward.
#[inline]
fn cmp_column(a: u64, b: u64) -> Ordering {
    let diff = a ^ b;
    if diff == 0 {
        Ordering::Equal
    } else if a >> diff.trailing_zeros() & 1 == 1 {
        Ordering::Greater
    } else {
        Ordering::Less
    }
}

impl Search<'_> {
    /// Fills position `k`. `state` relates the current prefix to the best
    /// string (`Less` also covers "no best yet"). Returns whether a new best
    /// was recorded below this node.
    fn descend(&mut self, k: usize, mut state: Ordering) -> bool {
        let n = self.g.order();
        if k == n {
            if state == Ordering::Less || !self.have_best {
                self.best_columns.copy_from_slice(&self.columns);
                self.best_placed.copy_from_slice(&self.placed);
                self.have_best = true;
                return true;
            }
            return false;
        }
        let color = self.slot_color[k];
        let candidates = self.class_members[color];
        let mut tried = VertexSet::EMPTY;
        let mut improved = false;
        for v in candidates {
            // a twin of an already tried vertex gives an identical subtree
            let nv = self.g.neighbors(v);
            if tried.iter().any(|t| {
                let mut a = nv;
                a.remove(t);
                let mut b = self.g.neighbors(t);
                b.remove(v);
                a == b
            }) {
                continue;
            }
            tried.insert(v);

            let mut col = 0u64;
            for (i, &p) in self.placed[..k].iter().enumerate() {
                if nv.contains(p) {
                    col |= 1 << i;
                }
            }
            let child_state = match state {
                Ordering::Equal if self.have_best => match cmp_column(col, self.best_columns[k]) {
                    Ordering::Greater => continue,
                    o => o,
                },
                _ => Ordering::Less,
            };
            self.placed[k] = v;
            self.columns[k] = col;
            self.class_members[color].remove(v);
            if self.descend(k + 1, child_state) {
                improved = true;
                // the new best shares this prefix
                state = Ordering::Equal;
            }
            self.class_members[color].insert(v);
        }
        improved
    }
}

/// Canonical labeling as a position-to-vertex list: `labeling[p]` is the
/// vertex placed at position `p`.
pub fn canonical_labeling(g: &Graph) -> Vec<usize> {
    let n = g.order();
    let colors = refined_colors(g);
    let classes = colors.iter().copied().max().map_or(0, |m| m + 1);
    let mut class_members = vec![VertexSet::EMPTY; classes];
    for (v, &c) in colors.iter().enumerate() {
        class_members[c].insert(v);
    }
    let mut slot_color = Vec::with_capacity(n);
    for (c, members) in class_members.iter().enumerate() {
        slot_color.extend(std::iter::repeat_n(c, members.len()));
    }
    let mut search = Search {
        g,
        slot_color,
        class_members,
        placed: vec![0; n],
        columns: vec![0; n],
        best_columns: vec![0; n],
        best_placed: vec![0; n],
        have_best: false,
    };
    search.descend(0, Ordering::Less);
    search.best_placed
}

/// Relabeling of `g` into its canonical representative.
pub fn canonical_graph(g: &Graph) -> Graph {
    let labeling = canonical_labeling(g);
    let mut perm = vec![0; g.order()];
    for (p, &v) in labeling.iter().enumerate() {
        perm[v] = p;
    }
    g.relabel(&perm)
}

pub fn canonical_form(g: &Graph) -> CanonicalForm {
    let labeling = canonical_labeling(g);
    let n = g.order();
    let total = n * (n - 1) / 2;
    let mut bits = vec![0u8; total.div_ceil(8)];
    let mut k = 0;
    for j in 1..n {
        let nj = g.neighbors(labeling[j]);
        for &vi in &labeling[..j] {
            if nj.contains(vi) {
                bits[k / 8] |= 1 << (7 - k % 8);
            }
            k += 1;
        }
    }
    CanonicalForm { n: n as u8, bits }
}

/// Graphs of different orders are never isomorphic.
pub fn is_isomorphic(g: &Graph, h: &Graph) -> bool {
    g.order() == h.order()
        && g.size() == h.size()
        && g.degree_sequence() == h.degree_sequence()
        && canonical_form(g) == canonical_form(h)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn g(n: usize, edges: &[(usize, usize)]) -> Graph {
        Graph::new(n, edges).unwrap()
    }

    /// All permutations of `0..n` (Heap's algorithm).
    fn permutations(n: usize) -> Vec<Vec<usize>> {
        fn heap(k: usize, a: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
            if k <= 1 {
                out.push(a.clone());
                return;
            }
            for i in 0..k {
                heap(k - 1, a, out);
                if k.is_multiple_of(2) {
                    a.swap(i, k - 1);
                } else {
                    a.swap(0, k - 1);
                }
            }
        }
        let mut out = Vec::new();
        heap(n, &mut (0..n).collect(), &mut out);
        out
    }

    #[test]
    fn p3_relabelings_agree() {
        let a = g(3, &[(0, 1), (1, 2)]);
        let b = g(3, &[(1, 0), (0, 2)]);
        assert_eq!(canonical_form(&a), canonical_form(&b));
        let k3 = g(3, &[(0, 1), (1, 2), (0, 2)]);
        assert_ne!(canonical_form(&k3), canonical_form(&a));
    }

    #[test]
    fn paw_has_one_form_over_all_labelings() {
        let paw = g(4, &[(0, 1), (0, 2), (1, 2), (0, 3)]);
        let perms = permutations(4);
        assert_eq!(perms.len(), 24);
        let mut forms: Vec<CanonicalForm> = perms
            .iter()
            .map(|p| canonical_form(&paw.relabel(p)))
            .collect();
        forms.sort();
        forms.dedup();
        assert_eq!(forms.len(), 1);
    }

    #[test]
    fn isomorphism_examples() {
        let c4 = g(4, &[(0, 1), (1, 2), (2, 3), (3, 0)]);
        let k22 = g(4, &[(0, 2), (0, 3), (1, 2), (1, 3)]);
        assert!(is_isomorphic(&c4, &k22));

        let p4 = g(4, &[(0, 1), (1, 2), (2, 3)]);
        let claw = g(4, &[(0, 1), (0, 2), (0, 3)]);
        assert!(!is_isomorphic(&p4, &claw));

        assert!(!is_isomorphic(&g(3, &[]), &g(4, &[])));
    }

    #[test]
    fn house_under_every_relabeling() {
        let house = g(5, &[(0, 1), (1, 2), (2, 3), (3, 0), (0, 4), (1, 4)]);
        let form = canonical_form(&house);
        for p in permutations(5) {
            let h = house.relabel(&p);
            assert!(is_isomorphic(&house, &h));
            assert_eq!(canonical_form(&h), form);
        }
    }

    #[test]
    fn form_round_trips_to_an_isomorphic_graph() {
        let house = g(5, &[(0, 1), (1, 2), (2, 3), (3, 0), (0, 4), (1, 4)]);
        let form = canonical_form(&house);
        let rep = form.to_graph();
        assert_eq!(rep, canonical_graph(&house));
        assert_eq!(canonical_form(&rep), form);
    }

    #[test]
    fn symmetric_graphs_terminate_quickly() {
        let mut edges = Vec::new();
        for u in 0..12 {
            for v in u + 1..12 {
                edges.push((u, v));
            }
        }
        let k12 = g(12, &edges);
        assert_eq!(canonical_graph(&k12), k12);
        let e12 = g(12, &[]);
        assert!(canonical_form(&e12).bits().iter().all(|&b| b == 0));
    }

    #[test]
    fn k1_form() {
        let k1 = g(1, &[]);
        let f = canonical_form(&k1);
        assert_eq!(f.order(), 1);
        assert!(f.bits().is_empty());
        assert_eq!(f.to_graph(), k1);
    }
}

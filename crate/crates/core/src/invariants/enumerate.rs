use std::ops::ControlFlow;

use crate::bitset::{self, VertexSet};
use crate::graph::Graph;

/// Bron–Kerbosch with pivoting, run on the complement implicitly: the
/// candidates that stay compatible with `v` are `P \ N[v]`.
pub(crate) fn bron_kerbosch<F>(g: &Graph, visit: &mut F) -> usize
where
    F: FnMut(&VertexSet) -> ControlFlow<()>,
{
    let n = g.order();
    let w = g.words();
    let mut r = vec![0u64; w];
    let p = VertexSet::full(n).words().to_vec();
    let x = vec![0u64; w];
    let mut count = 0;
    let _ = recurse(g, &mut r, p, x, visit, &mut count);
    count
}

fn recurse<F>(
    g: &Graph,
    r: &mut Vec<u64>,
    mut p: Vec<u64>,
    mut x: Vec<u64>,
    visit: &mut F,
    count: &mut usize,
) -> ControlFlow<()>
where
    F: FnMut(&VertexSet) -> ControlFlow<()>,
{
    if bitset::is_zero(&p) {
        if bitset::is_zero(&x) {
            *count += 1;
            return visit(&VertexSet::from_words(g.order(), r.clone()));
        }
        return ControlFlow::Continue(());
    }
    // Pivot minimises |P ∩ N[u]|, the number of branches taken.
    let mut pivot = None;
    for u in bitset::ones(&p).chain(bitset::ones(&x)) {
        let mut c = bitset::and_count(&p, g.row(u));
        if bitset::test(&p, u) {
            c += 1;
        }
        if pivot.is_none_or(|(bc, _)| c < bc) {
            pivot = Some((c, u));
        }
    }
    let (_, u) = pivot.unwrap();
    let mut branch: Vec<u64> = p.iter().zip(g.row(u)).map(|(a, b)| a & b).collect();
    if bitset::test(&p, u) {
        bitset::set(&mut branch, u);
    }
    for v in bitset::ones(&branch) {
        let mut p2 = p.clone();
        let mut x2 = x.clone();
        bitset::unset(&mut p2, v);
        bitset::and_not_assign(&mut p2, g.row(v));
        bitset::unset(&mut x2, v);
        bitset::and_not_assign(&mut x2, g.row(v));
        bitset::set(r, v);
        let flow = recurse(g, r, p2, x2, visit, count);
        bitset::unset(r, v);
        flow?;
        bitset::unset(&mut p, v);
        bitset::set(&mut x, v);
    }
    ControlFlow::Continue(())
}

//! Exhaustive search over legal labellings.
//!
//! Vertices are labelled in index order. Classes are introduced by first
//! occurrence, so each labelling is visited once up to renaming of
//! `1..=n`, and the first optimum met is the lexicographically least one.

use std::ops::ControlFlow;
use std::sync::atomic::{AtomicUsize, Ordering};

use rayon::prelude::*;

use super::Labelling;
use crate::graph::Graph;
use crate::options::{Deadline, SolveError, SolveOptions};

/// Search switches.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct LabelSearch {
    /// Whether `[n]` may be used at all.
    pub allow_full: bool,
}

impl Default for LabelSearch {
    fn default() -> Self {
        LabelSearch { allow_full: true }
    }
}

struct Ctx<'a> {
    n: usize,
    full: u32,
    allow_full: bool,
    adj: Vec<Vec<usize>>,
    earlier: Vec<Vec<usize>>,
    /// `completes[v]`: vertices whose closed neighbourhood is fully labelled
    /// once `v` is.
    completes: Vec<Vec<usize>>,
    deadline: &'a Deadline,
}

#[derive(Clone)]
struct State {
    tags: Vec<u32>,
    used: u32,
    weight: usize,
    /// Nonzero labels seen so far in each closed neighbourhood.
    hits: Vec<u32>,
}

impl<'a> Ctx<'a> {
    fn new(g: &Graph, n: usize, allow_full: bool, deadline: &'a Deadline) -> Self {
        let order = g.order();
        let adj: Vec<Vec<usize>> = (0..order).map(|v| g.neighbor_iter(v).collect()).collect();
        let earlier = adj
            .iter()
            .enumerate()
            .map(|(v, ns)| ns.iter().copied().filter(|&u| u < v).collect())
            .collect();
        let mut completes = vec![Vec::new(); order];
        for (w, ns) in adj.iter().enumerate() {
            let last = ns.iter().copied().fold(w, usize::max);
            completes[last].push(w);
        }
        Ctx {
            n,
            full: n as u32 + 1,
            allow_full,
            adj,
            earlier,
            completes,
            deadline,
        }
    }

    fn order(&self) -> usize {
        self.adj.len()
    }

    fn root(&self) -> State {
        State {
            tags: Vec::with_capacity(self.order()),
            used: 0,
            weight: 0,
            hits: vec![0; self.order()],
        }
    }

    fn cost(&self, t: u32) -> usize {
        match t {
            0 => 0,
            t if t == self.full => self.n,
            _ => 1,
        }
    }

    /// Labels to try at the next vertex, in increasing tag order.
    fn choices(&self, s: &State) -> impl Iterator<Item = u32> {
        let top = (s.used + 1).min(self.n as u32);
        let full = self.allow_full.then_some(self.full);
        (0..=top).chain(full)
    }

    fn edge_ok(&self, a: u32, b: u32) -> bool {
        a == 0 || b == 0 || (a == b && a != self.full)
    }

    fn local_ok(&self, tags: &[u32], w: usize) -> bool {
        match tags[w] {
            0 => {
                let mut first = 0;
                for &u in &self.adj[w] {
                    let t = tags[u];
                    if t == self.full {
                        return true;
                    }
                    if t != 0 {
                        if first == 0 {
                            first = t;
                        } else if first != t {
                            return true;
                        }
                    }
                }
                false
            }
            t if t == self.full => true,
            t => self.adj[w].iter().any(|&u| tags[u] == t),
        }
    }

    /// Labels the next vertex with `t`, or returns false if that breaks a
    /// condition that can already be decided.
    fn push(&self, s: &mut State, t: u32) -> bool {
        let v = s.tags.len();
        if !self.earlier[v].iter().all(|&u| self.edge_ok(t, s.tags[u])) {
            return false;
        }
        s.tags.push(t);
        if !self.completes[v].iter().all(|&w| self.local_ok(&s.tags, w)) {
            s.tags.pop();
            return false;
        }
        if t != 0 {
            s.hits[v] += 1;
            self.adj[v].iter().for_each(|&u| s.hits[u] += 1);
        }
        if t > s.used && t != self.full {
            s.used = t;
        }
        s.weight += self.cost(t);
        true
    }

    fn pop(&self, s: &mut State, used_before: u32) {
        let v = s.tags.len() - 1;
        let t = s.tags.pop().unwrap();
        if t != 0 {
            s.hits[v] -= 1;
            self.adj[v].iter().for_each(|&u| s.hits[u] -= 1);
        }
        s.used = used_before;
        s.weight -= self.cost(t);
    }

    /// Every vertex needs a nonzero label in its closed neighbourhood. Count
    /// how many more nonzero vertices that forces, each unlabelled vertex
    /// serving at most the needy vertices around it.
    fn lower_bound(&self, s: &State) -> usize {
        let pos = s.tags.len();
        let need = s.hits.iter().filter(|&&h| h == 0).count();
        if need == 0 {
            return 0;
        }
        let mut reach: Vec<usize> = (pos..self.order())
            .map(|u| (s.hits[u] == 0) as usize + self.adj[u].iter().filter(|&&w| s.hits[w] == 0).count())
            .filter(|&c| c > 0)
            .collect();
        reach.sort_unstable_by(|a, b| b.cmp(a));
        let mut covered = 0;
        for (i, c) in reach.iter().enumerate() {
            covered += c;
            if covered >= need {
                return i + 1;
            }
        }
        usize::MAX
    }
}

struct Best<'a> {
    shared: &'a AtomicUsize,
    weight: usize,
    tags: Option<Vec<u32>>,
}

fn optimise(ctx: &Ctx, s: &mut State, best: &mut Best) {
    if ctx.deadline.expired() {
        return;
    }
    let lb = ctx.lower_bound(s);
    if lb == usize::MAX {
        return;
    }
    let floor = s.weight + lb;
    // Other subtrees may only cut strictly so ties stay with the earliest one.
    if floor >= best.weight || floor > best.shared.load(Ordering::Relaxed) {
        return;
    }
    if s.tags.len() == ctx.order() {
        best.weight = s.weight;
        best.tags = Some(s.tags.clone());
        best.shared.fetch_min(s.weight, Ordering::Relaxed);
        return;
    }
    let used = s.used;
    for t in ctx.choices(s).collect::<Vec<_>>() {
        if ctx.push(s, t) {
            optimise(ctx, s, best);
            ctx.pop(s, used);
        }
    }
}

/// All consistent prefixes of the given length, in lexicographic order.
fn prefixes(ctx: &Ctx, s: &mut State, depth: usize, out: &mut Vec<State>) {
    if s.tags.len() == depth {
        out.push(s.clone());
        return;
    }
    let used = s.used;
    for t in ctx.choices(s).collect::<Vec<_>>() {
        if ctx.push(s, t) {
            prefixes(ctx, s, depth, out);
            ctx.pop(s, used);
        }
    }
}

fn check_n(n: usize) -> Result<(), SolveError> {
    if n < 2 {
        return Err(SolveError::Undefined(
            "labelling",
            format!("clique order must be at least 2, got {n}"),
        ));
    }
    Ok(())
}

/// Lexicographically least legal labelling of minimum weight, so that its
/// weight is `i(G × K_n)`.
pub fn minimize_weight(g: &Graph, n: usize, opts: &SolveOptions) -> Result<Labelling, SolveError> {
    minimize_weight_with(g, n, LabelSearch::default(), opts)
}

/// As [`minimize_weight`], with search switches. Returns
/// [`SolveError::Undefined`] when no labelling qualifies, which can only
/// happen when `[n]` is excluded.
pub fn minimize_weight_with(
    g: &Graph,
    n: usize,
    search: LabelSearch,
    opts: &SolveOptions,
) -> Result<Labelling, SolveError> {
    check_n(n)?;
    opts.check_cap(g.order())?;
    let deadline = Deadline::new(opts.budget);
    let ctx = Ctx::new(g, n, search.allow_full, &deadline);
    let limit = n * g.order() + 1;
    let shared = AtomicUsize::new(limit);
    let found = if opts.parallel() {
        let depth = g.order().min(4);
        let mut starts = Vec::new();
        prefixes(&ctx, &mut ctx.root(), depth, &mut starts);
        let results: Vec<Option<(usize, Vec<u32>)>> = opts.install(|| {
            starts
                .into_par_iter()
                .map(|mut s| {
                    let mut best = Best {
                        shared: &shared,
                        weight: limit,
                        tags: None,
                    };
                    optimise(&ctx, &mut s, &mut best);
                    best.tags.map(|t| (best.weight, t))
                })
                .collect()
        });
        // Prefixes are in lexicographic order, so the first minimum wins.
        results
            .into_iter()
            .flatten()
            .fold(None, |acc: Option<(usize, Vec<u32>)>, cur| match acc {
                Some(a) if a.0 <= cur.0 => Some(a),
                _ => Some(cur),
            })
    } else {
        let mut best = Best {
            shared: &shared,
            weight: limit,
            tags: None,
        };
        optimise(&ctx, &mut ctx.root(), &mut best);
        best.tags.map(|t| (best.weight, t))
    };
    deadline.result()?;
    match found {
        Some((_, tags)) => Ok(Labelling::from_tags_unchecked(n, tags)),
        None => Err(SolveError::Undefined(
            "labelling",
            "no legal labelling without [n]".to_string(),
        )),
    }
}

/// Visits every legal labelling with classes numbered by first occurrence,
/// in lexicographic order. Returns how many were visited.
pub fn enumerate_legal_labellings<F>(
    g: &Graph,
    n: usize,
    search: LabelSearch,
    opts: &SolveOptions,
    mut visit: F,
) -> Result<usize, SolveError>
where
    F: FnMut(&Labelling) -> ControlFlow<()>,
{
    fn walk<F: FnMut(&Labelling) -> ControlFlow<()>>(
        ctx: &Ctx,
        s: &mut State,
        count: &mut usize,
        visit: &mut F,
    ) -> ControlFlow<()> {
        if ctx.deadline.expired() {
            return ControlFlow::Break(());
        }
        if s.tags.len() == ctx.order() {
            *count += 1;
            return visit(&Labelling::from_tags_unchecked(ctx.n, s.tags.clone()));
        }
        let used = s.used;
        for t in ctx.choices(s).collect::<Vec<_>>() {
            if ctx.push(s, t) {
                let flow = walk(ctx, s, count, visit);
                ctx.pop(s, used);
                flow?;
            }
        }
        ControlFlow::Continue(())
    }

    check_n(n)?;
    opts.check_cap(g.order())?;
    let deadline = Deadline::new(opts.budget);
    let ctx = Ctx::new(g, n, search.allow_full, &deadline);
    let mut count = 0;
    let _ = walk(&ctx, &mut ctx.root(), &mut count, &mut visit);
    deadline.result()?;
    Ok(count)
}

//! Maximal biclique enumeration by bipartite Bron-Kerbosch.
//!
//! For each vertex `u_i` of the initiating side, taken in bidegeneracy order,
//! the recursion searches the bicliques containing `u_i` among its
//! projection-extended neighbors, excluding those that contain an earlier
//! vertex. Candidate (`P`) and excluded (`X`) sets live in one working array
//! per side: a frame owns the range `[xb, pe)` of each array, with `X` in
//! `[xb, pb)` and `P` in `[pb, pe)`. Children are carved out by partitioning
//! in place, so no frame allocates its sets.
//!
//! The one-sided bicliques (a whole side with nothing opposite) are emitted
//! outside the recursion by [`emit_trivial_bicliques`].

use std::convert::Infallible;

use crate::graph::{Adjacency, BipartiteGraph, VertexId};
use crate::ordering::BidegeneracyOrder;

const U: usize = 0;
const V: usize = 1;

/// A biclique given by its `U` part and its `V` part, both sorted.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Biclique {
    pub left: Vec<VertexId>,
    pub right: Vec<VertexId>,
}

impl Biclique {
    pub fn new(mut left: Vec<VertexId>, mut right: Vec<VertexId>) -> Self {
        left.sort_unstable();
        right.sort_unstable();
        Biclique { left, right }
    }

    pub fn len(&self) -> usize {
        self.left.len() + self.right.len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// One part is empty.
    pub fn is_trivial(&self) -> bool {
        self.left.is_empty() || self.right.is_empty()
    }

    /// The same vertex set seen from a graph with its sides swapped.
    pub fn swapped(self) -> Biclique {
        Biclique { left: self.right, right: self.left }
    }
}

/// Receives bicliques as sorted `U` and `V` parts. An error aborts the run.
pub trait BicliqueSink {
    type Error;

    fn accept(&mut self, left: &[VertexId], right: &[VertexId]) -> Result<(), Self::Error>;
}

impl BicliqueSink for Vec<Biclique> {
    type Error = Infallible;

    fn accept(&mut self, left: &[VertexId], right: &[VertexId]) -> Result<(), Infallible> {
        self.push(Biclique { left: left.to_vec(), right: right.to_vec() });
        Ok(())
    }
}

/// Counts bicliques without storing them.
#[derive(Debug, Default, Clone, Copy, PartialEq, Eq)]
pub struct CountSink {
    pub count: u64,
}

impl BicliqueSink for CountSink {
    type Error = Infallible;

    fn accept(&mut self, _: &[VertexId], _: &[VertexId]) -> Result<(), Infallible> {
        self.count += 1;
        Ok(())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct EnumerateOptions {
    /// Also emit the whole `U` or `V` side when it is a maximal biclique.
    pub include_trivial: bool,
    /// Assert the frame invariants at every call. Quadratic; for small inputs.
    pub check_invariants: bool,
}

impl Default for EnumerateOptions {
    fn default() -> Self {
        EnumerateOptions { include_trivial: true, check_invariants: false }
    }
}

/// Call-tree counters of one enumeration.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct RunStatistics {
    /// Bicliques emitted by the recursion (`B`).
    pub maximal_count: u64,
    /// Calls that made no recursive call (`ℓ`).
    pub leaf_count: u64,
    pub internal_count: u64,
    /// Largest emitted non-trivial biclique.
    pub q_observed: usize,
    /// Largest `|R|` over all calls.
    pub max_depth: usize,
    /// `|P_i|` of the root call at each order position (0 for skipped roots).
    pub root_candidates: Vec<usize>,
    pub max_root_candidates: usize,
    /// One-sided bicliques emitted outside the recursion.
    pub emitted_trivial: u8,
}

impl RunStatistics {
    /// `B / ℓ`, undefined without leaves.
    pub fn ratio_r(&self) -> Option<f64> {
        (self.leaf_count > 0).then(|| self.maximal_count as f64 / self.leaf_count as f64)
    }

    pub fn total_emitted(&self) -> u64 {
        self.maximal_count + u64::from(self.emitted_trivial)
    }

    /// Checks `ℓ ≤ 2^q · B`. `None` when there is nothing to check or the
    /// bound does not fit in 64 bits.
    pub fn leaf_bound_holds(&self) -> Option<bool> {
        if self.maximal_count == 0 || self.q_observed > 62 {
            return None;
        }
        let bound = (1u128 << self.q_observed) * u128::from(self.maximal_count);
        Some(u128::from(self.leaf_count) <= bound)
    }
}

/// Runs the enumeration initiated on the side `order` ranges over. Bicliques
/// reach `sink` expressed in the graph's own `U`/`V` roles.
pub fn enumerate<S: BicliqueSink>(
    g: &BipartiteGraph,
    order: &BidegeneracyOrder,
    sink: &mut S,
    options: EnumerateOptions,
) -> Result<RunStatistics, S::Error> {
    let swapped = !g.is_u(order.side());
    let (own, other) = g.side(order.side());
    assert_eq!(order.len(), own.len(), "order does not cover the initiating side");

    let mut engine = Engine::new(own.adjacency(), other.adjacency(), swapped, sink, options.check_invariants);
    engine.run_roots(order)?;
    let mut stats = engine.stats;
    if options.include_trivial {
        stats.emitted_trivial = emit_trivial_bicliques(g, sink)?;
    }
    Ok(stats)
}

/// Emits `U` when no `V` vertex is adjacent to all of it, and `V` likewise.
/// Returns how many were emitted.
pub fn emit_trivial_bicliques<S: BicliqueSink>(g: &BipartiteGraph, sink: &mut S) -> Result<u8, S::Error> {
    let mut emitted = 0;
    let (nu, nv) = (g.u_count(), g.v_count());
    let u_adj = g.u().adjacency();
    let v_adj = g.v().adjacency();
    if nu > 0 && (0..nv as VertexId).all(|v| v_adj.degree(v) != nu) {
        let all: Vec<VertexId> = (0..nu as VertexId).collect();
        sink.accept(&all, &[])?;
        emitted += 1;
    }
    if nv > 0 && (0..nu as VertexId).all(|u| u_adj.degree(u) != nv) {
        let all: Vec<VertexId> = (0..nv as VertexId).collect();
        sink.accept(&[], &all)?;
        emitted += 1;
    }
    Ok(emitted)
}

/// Convenience wrapper: every maximal biclique, sorted.
pub fn maximal_bicliques(g: &BipartiteGraph, order: &BidegeneracyOrder, include_trivial: bool) -> Vec<Biclique> {
    let mut out = Vec::new();
    let options = EnumerateOptions { include_trivial, ..Default::default() };
    let Ok(_) = enumerate(g, order, &mut out, options);
    out.sort_unstable();
    out
}

/// An explicit `(R, P, X)` triple, split by side, in the graph's `U`/`V` roles.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct CallFrame {
    pub r_u: Vec<VertexId>,
    pub r_v: Vec<VertexId>,
    pub p_u: Vec<VertexId>,
    pub p_v: Vec<VertexId>,
    pub x_u: Vec<VertexId>,
    pub x_v: Vec<VertexId>,
}

/// Which side a vertex belongs to, in the graph's `U`/`V` roles.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Part {
    U,
    V,
}

impl Part {
    fn from_index(i: usize) -> Part {
        if i == U {
            Part::U
        } else {
            Part::V
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PivotChoice {
    pub part: Part,
    pub pivot: VertexId,
    /// Iteration set: the pivot first when it is a candidate, then the
    /// opposite-side candidates it does not cover, ascending.
    pub queue: Vec<(Part, VertexId)>,
}

/// Runs the recursion from an explicit frame. The frame must satisfy the
/// usual invariants (`R` a biclique, every member of `P ∪ X` extends it).
pub fn run_frame<S: BicliqueSink>(
    g: &BipartiteGraph,
    frame: &CallFrame,
    sink: &mut S,
    check_invariants: bool,
) -> Result<RunStatistics, S::Error> {
    let mut engine = Engine::new(g.u().adjacency(), g.v().adjacency(), false, sink, check_invariants);
    let span = engine.load_frame(frame);
    engine.expand(span)?;
    Ok(engine.stats)
}

/// Pivot selection on an explicit frame; `None` when `P ∪ X` is empty.
pub fn select_pivot(g: &BipartiteGraph, frame: &CallFrame) -> Option<PivotChoice> {
    let mut sink = CountSink::default();
    let mut engine = Engine::new(g.u().adjacency(), g.v().adjacency(), false, &mut sink, false);
    let span = engine.load_frame(frame);
    let (part, pivot) = engine.push_pivot_queue(&span)?;
    let queue = engine.queue.iter().map(|&(p, x)| (Part::from_index(p), x)).collect();
    Some(PivotChoice { part: Part::from_index(part), pivot, queue })
}

#[derive(Debug, Clone, Copy, Default)]
struct Span {
    xb: usize,
    pb: usize,
    pe: usize,
}

impl Span {
    #[inline]
    fn p_len(&self) -> usize {
        self.pe - self.pb
    }

    #[inline]
    fn x_len(&self) -> usize {
        self.pb - self.xb
    }
}

/// A permutation of one side's vertices plus its inverse.
struct Workspace {
    arr: Vec<VertexId>,
    pos: Vec<usize>,
}

impl Workspace {
    fn new(n: usize) -> Self {
        Workspace { arr: (0..n as VertexId).collect(), pos: (0..n).collect() }
    }

    #[inline]
    fn swap_to(&mut self, x: VertexId, target: usize) {
        let from = self.pos[x as usize];
        let y = self.arr[target];
        self.arr.swap(from, target);
        self.pos[y as usize] = from;
        self.pos[x as usize] = target;
    }

    #[inline]
    fn swap_at(&mut self, i: usize, j: usize) {
        self.arr.swap(i, j);
        self.pos[self.arr[i] as usize] = i;
        self.pos[self.arr[j] as usize] = j;
    }

    /// Moves the members of `neigh` found in `[lo, hi)` to its front and
    /// returns the end of that block.
    fn keep_front(&mut self, lo: usize, hi: usize, neigh: &[VertexId]) -> usize {
        let mut k = lo;
        if neigh.len() <= hi - lo {
            for &w in neigh {
                let p = self.pos[w as usize];
                if p >= lo && p < hi {
                    self.swap_at(p, k);
                    k += 1;
                }
            }
        } else {
            for i in lo..hi {
                if neigh.binary_search(&self.arr[i]).is_ok() {
                    self.swap_at(i, k);
                    k += 1;
                }
            }
        }
        k
    }

    /// Moves the members of `neigh` found in `[lo, hi)` to its back and
    /// returns the start of that block.
    fn keep_back(&mut self, lo: usize, hi: usize, neigh: &[VertexId]) -> usize {
        let mut k = hi;
        if neigh.len() <= hi - lo {
            for &w in neigh {
                let p = self.pos[w as usize];
                if p >= lo && p < hi {
                    k -= 1;
                    self.swap_at(p, k);
                }
            }
        } else {
            for i in (lo..hi).rev() {
                if neigh.binary_search(&self.arr[i]).is_ok() {
                    k -= 1;
                    self.swap_at(i, k);
                }
            }
        }
        k
    }

    fn count_in(&self, lo: usize, hi: usize, neigh: &[VertexId]) -> usize {
        if neigh.len() <= hi - lo {
            neigh
                .iter()
                .filter(|&&w| {
                    let p = self.pos[w as usize];
                    p >= lo && p < hi
                })
                .count()
        } else {
            self.arr[lo..hi].iter().filter(|w| neigh.binary_search(w).is_ok()).count()
        }
    }
}

struct Engine<'a, S: BicliqueSink> {
    /// `adj[U]` maps initiating-side vertices to their neighbors, `adj[V]` back.
    adj: [&'a Adjacency; 2],
    ws: [Workspace; 2],
    r: [Vec<VertexId>; 2],
    /// Iteration sets of all active frames, stacked.
    queue: Vec<(usize, VertexId)>,
    emit_buf: [Vec<VertexId>; 2],
    /// The initiating side is the graph's `V`.
    swapped: bool,
    sink: &'a mut S,
    stats: RunStatistics,
    check: bool,
}

impl<'a, S: BicliqueSink> Engine<'a, S> {
    fn new(own: &'a Adjacency, other: &'a Adjacency, swapped: bool, sink: &'a mut S, check: bool) -> Self {
        Engine {
            adj: [own, other],
            ws: [Workspace::new(own.len()), Workspace::new(other.len())],
            r: [Vec::new(), Vec::new()],
            queue: Vec::new(),
            emit_buf: [Vec::new(), Vec::new()],
            swapped,
            sink,
            stats: RunStatistics::default(),
            check,
        }
    }

    fn run_roots(&mut self, order: &BidegeneracyOrder) -> Result<(), S::Error> {
        let own = self.adj[U];
        let other = self.adj[V];
        let rank = order.ranks();
        let mut stamp = vec![usize::MAX; own.len()];
        let mut second = Vec::new();
        self.stats.root_candidates.reserve(order.len());

        for (i, &u) in order.sequence().iter().enumerate() {
            let neighbors = own.neighbors(u);
            if neighbors.is_empty() {
                // An isolated root would only yield the singleton {u}.
                self.stats.root_candidates.push(0);
                continue;
            }

            second.clear();
            stamp[u as usize] = i;
            for &y in neighbors {
                for &w in other.neighbors(y) {
                    if stamp[w as usize] != i {
                        stamp[w as usize] = i;
                        second.push(w);
                    }
                }
            }

            let ws = &mut self.ws[U];
            let mut k = 0;
            for &w in second.iter().filter(|&&w| rank[w as usize] < i) {
                ws.swap_to(w, k);
                k += 1;
            }
            let pb = k;
            for &w in second.iter().filter(|&&w| rank[w as usize] > i) {
                ws.swap_to(w, k);
                k += 1;
            }
            for (j, &y) in neighbors.iter().enumerate() {
                self.ws[V].swap_to(y, j);
            }
            let span = [Span { xb: 0, pb, pe: k }, Span { xb: 0, pb: 0, pe: neighbors.len() }];

            let candidates = (k - pb) + neighbors.len();
            self.stats.root_candidates.push(candidates);
            self.stats.max_root_candidates = self.stats.max_root_candidates.max(candidates);

            self.r[U].push(u);
            let res = self.expand(span);
            self.r[U].pop();
            res?;
        }
        Ok(())
    }

    fn load_frame(&mut self, frame: &CallFrame) -> [Span; 2] {
        self.r = [frame.r_u.clone(), frame.r_v.clone()];
        let mut span = [Span::default(); 2];
        for (part, (x, p)) in [(&frame.x_u, &frame.p_u), (&frame.x_v, &frame.p_v)].into_iter().enumerate() {
            let mut k = 0;
            for &w in x {
                self.ws[part].swap_to(w, k);
                k += 1;
            }
            let pb = k;
            for &w in p {
                self.ws[part].swap_to(w, k);
                k += 1;
            }
            span[part] = Span { xb: 0, pb, pe: k };
        }
        span
    }

    fn expand(&mut self, mut span: [Span; 2]) -> Result<(), S::Error> {
        let depth = self.r[U].len() + self.r[V].len();
        self.stats.max_depth = self.stats.max_depth.max(depth);
        if self.check {
            self.check_frame(&span);
        }

        let (pu, pv) = (span[U].p_len(), span[V].p_len());
        let (xu, xv) = (span[U].x_len(), span[V].x_len());
        if (pu == 0 || pv == 0) && xu == 0 && xv == 0 {
            self.stats.leaf_count += 1;
            // R ∪ P with no V vertex is a strict subset of U here, never maximal.
            if self.r[V].len() + pv > 0 {
                self.emit(&span)?;
            }
            return Ok(());
        }
        if (pu == 0 && xv > 0) || (pv == 0 && xu > 0) {
            self.stats.leaf_count += 1;
            return Ok(());
        }

        let q_start = self.queue.len();
        if self.push_pivot_queue(&span).is_none() || self.queue.len() == q_start {
            self.stats.leaf_count += 1;
            return Ok(());
        }
        self.stats.internal_count += 1;
        let q_end = self.queue.len();

        for i in q_start..q_end {
            let (part, x) = self.queue[i];
            let other = 1 - part;
            let neigh = self.adj[part].neighbors(x);

            let last = span[part].pe - 1;
            self.ws[part].swap_to(x, last);
            let mut child = span;
            child[part].pe = last;
            child[other].pe = self.ws[other].keep_front(span[other].pb, span[other].pe, neigh);
            child[other].xb = self.ws[other].keep_back(span[other].xb, span[other].pb, neigh);

            self.r[part].push(x);
            let res = self.expand(child);
            self.r[part].pop();
            res?;

            self.ws[part].swap_to(x, span[part].pb);
            span[part].pb += 1;
        }
        // Hand the processed candidates back to P so the caller's X/P
        // boundaries hold again.
        for i in (q_start..q_end).rev() {
            let (part, x) = self.queue[i];
            span[part].pb -= 1;
            self.ws[part].swap_to(x, span[part].pb);
        }
        self.queue.truncate(q_start);
        Ok(())
    }

    /// Picks the pivot minimizing the iteration set and pushes that set onto
    /// `queue`. Ties prefer candidates over excluded vertices, then the `U`
    /// side, then the smallest id.
    fn push_pivot_queue(&mut self, span: &[Span; 2]) -> Option<(usize, VertexId)> {
        let mut best: Option<(usize, bool, usize, VertexId)> = None;
        for part in [U, V] {
            let other = 1 - part;
            let s = span[part];
            let o = span[other];
            for idx in s.xb..s.pe {
                let p = self.ws[part].arr[idx];
                let in_x = idx < s.pb;
                let covered = self.ws[other].count_in(o.pb, o.pe, self.adj[part].neighbors(p));
                let size = o.p_len() - covered + usize::from(!in_x);
                let key = (size, in_x, part, p);
                if best.is_none_or(|b| key < b) {
                    best = Some(key);
                }
            }
        }
        let (_, in_x, part, p) = best?;
        if !in_x {
            self.queue.push((part, p));
        }
        let other = 1 - part;
        let rest = self.queue.len();
        let covered = self.adj[part].neighbors(p);
        let o = span[other];
        for &y in &self.ws[other].arr[o.pb..o.pe] {
            if covered.binary_search(&y).is_err() {
                self.queue.push((other, y));
            }
        }
        self.queue[rest..].sort_unstable();
        Some((part, p))
    }

    fn emit(&mut self, span: &[Span; 2]) -> Result<(), S::Error> {
        let mut bufs = std::mem::take(&mut self.emit_buf);
        for part in [U, V] {
            let buf = &mut bufs[part];
            buf.clear();
            buf.extend_from_slice(&self.r[part]);
            buf.extend_from_slice(&self.ws[part].arr[span[part].pb..span[part].pe]);
            buf.sort_unstable();
        }
        self.stats.maximal_count += 1;
        self.stats.q_observed = self.stats.q_observed.max(bufs[U].len() + bufs[V].len());
        let res =
            if self.swapped { self.sink.accept(&bufs[V], &bufs[U]) } else { self.sink.accept(&bufs[U], &bufs[V]) };
        self.emit_buf = bufs;
        res
    }

    fn check_frame(&self, span: &[Span; 2]) {
        let adjacent = |part: usize, a: VertexId, b: VertexId| self.adj[part].contains(a, b);
        for &a in &self.r[U] {
            for &b in &self.r[V] {
                assert!(adjacent(U, a, b), "R is not a biclique");
            }
        }
        for part in [U, V] {
            let other = 1 - part;
            let s = span[part];
            assert!(s.xb <= s.pb && s.pb <= s.pe && s.pe <= self.ws[part].arr.len());
            for &x in &self.ws[part].arr[s.xb..s.pe] {
                assert!(!self.r[part].contains(&x), "R intersects P ∪ X");
                for &y in &self.r[other] {
                    assert!(adjacent(part, x, y), "candidate does not extend R");
                }
            }
        }
    }
}

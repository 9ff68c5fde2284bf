//! Exact enumeration of self-avoiding walks on Z^d by pruned backtracking.
//!
//! Counts are exact integers (arbitrary precision in the aggregate, with
//! checked 64-bit arithmetic in the hot loop), and the enumeration can be
//! parallelized over fixed-depth walk prefixes with a deterministic,
//! worker-count-independent aggregation.

use std::collections::HashSet;

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::Zero;
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::walk::{LatticePoint, LatticeWalk};

/// Default cap on visited search nodes before aborting with a budget error.
pub const DEFAULT_NODE_BUDGET: u64 = 2_000_000_000;

/// Prefix depth at which the search tree is split across workers.
const SPLIT_DEPTH: usize = 3;

#[derive(Debug, Clone)]
pub struct EnumConfig {
    pub n_max: usize,
    pub use_symmetry: bool,
    pub node_budget: u64,
}

impl EnumConfig {
    pub fn new(n_max: usize) -> Self {
        EnumConfig {
            n_max,
            use_symmetry: false,
            node_budget: DEFAULT_NODE_BUDGET,
        }
    }

    pub fn symmetry(mut self, on: bool) -> Self {
        self.use_symmetry = on;
        self
    }

    pub fn budget(mut self, nodes: u64) -> Self {
        self.node_budget = nodes;
        self
    }
}

/// Exact per-length counts and squared-endpoint sums.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EnumerationResult {
    pub dim: usize,
    /// `counts[n]` = c_n(d), exact.
    pub counts: Vec<BigUint>,
    /// `sq_end_sums[n]` = sum over all n-step SAWs of the squared endpoint norm.
    pub sq_end_sums: Vec<BigUint>,
    pub max_n: usize,
}

impl EnumerationResult {
    /// Exact mean squared displacement `sq_end_sums[n] / counts[n]`.
    pub fn mean_sq_displacement(&self, n: usize) -> Result<BigRational> {
        if n > self.max_n {
            return Err(Error::LengthOutOfRange { n, max: self.max_n });
        }
        if n == 0 {
            return Ok(BigRational::zero());
        }
        Ok(BigRational::new(
            BigInt::from(self.sq_end_sums[n].clone()),
            BigInt::from(self.counts[n].clone()),
        ))
    }
}

/// Occupancy structure for the pruning hot loop: a dense bitmap over the
/// box `[-n, n]^d` for d <= 3, an associative set above that.
enum Occupancy {
    Dense { bits: Vec<u64>, side: i64, reach: i64, dim: usize },
    Sparse(HashSet<u64>),
}

impl Occupancy {
    fn new(dim: usize, n_max: usize) -> Result<Self> {
        if dim <= 3 {
            let reach = n_max as i64;
            let side = 2 * reach + 1;
            let cells = (side as usize).pow(dim as u32);
            Ok(Occupancy::Dense {
                bits: vec![0u64; cells.div_ceil(64)],
                side,
                reach,
                dim,
            })
        } else {
            if dim > 8 || n_max > 127 {
                return Err(Error::InvalidArgument(
                    "sparse occupancy supports d <= 8 and n_max <= 127".into(),
                ));
            }
            Ok(Occupancy::Sparse(HashSet::with_capacity(1024)))
        }
    }

    #[inline]
    fn dense_index(coords: &[i64], side: i64, reach: i64, dim: usize) -> usize {
        let mut idx = 0i64;
        for a in 0..dim {
            idx = idx * side + (coords[a] + reach);
        }
        idx as usize
    }

    #[inline]
    fn sparse_key(coords: &[i64]) -> u64 {
        let mut key = 0u64;
        for &c in coords {
            key = (key << 8) | ((c + 128) as u64 & 0xff);
        }
        key
    }

    #[inline]
    fn occupied(&self, coords: &[i64]) -> bool {
        match self {
            Occupancy::Dense { bits, side, reach, dim } => {
                let idx = Self::dense_index(coords, *side, *reach, *dim);
                bits[idx / 64] & (1 << (idx % 64)) != 0
            }
            Occupancy::Sparse(set) => set.contains(&Self::sparse_key(coords)),
        }
    }

    #[inline]
    fn set(&mut self, coords: &[i64]) {
        match self {
            Occupancy::Dense { bits, side, reach, dim } => {
                let idx = Self::dense_index(coords, *side, *reach, *dim);
                bits[idx / 64] |= 1 << (idx % 64);
            }
            Occupancy::Sparse(set) => {
                set.insert(Self::sparse_key(coords));
            }
        }
    }

    #[inline]
    fn clear(&mut self, coords: &[i64]) {
        match self {
            Occupancy::Dense { bits, side, reach, dim } => {
                let idx = Self::dense_index(coords, *side, *reach, *dim);
                bits[idx / 64] &= !(1 << (idx % 64));
            }
            Occupancy::Sparse(set) => {
                set.remove(&Self::sparse_key(coords));
            }
        }
    }
}

/// Per-subtree tallies in checked 64-bit arithmetic.
#[derive(Debug, Clone)]
struct Tally {
    counts: Vec<u64>,
    sq_sums: Vec<u64>,
    nodes: u64,
}

impl Tally {
    fn new(n_max: usize) -> Self {
        Tally {
            counts: vec![0; n_max + 1],
            sq_sums: vec![0; n_max + 1],
            nodes: 0,
        }
    }

    fn record(&mut self, depth: usize, sq_norm: u64) -> Result<()> {
        self.counts[depth] = self.counts[depth]
            .checked_add(1)
            .ok_or_else(|| Error::BudgetExceeded("64-bit count overflow".into()))?;
        self.sq_sums[depth] = self.sq_sums[depth]
            .checked_add(sq_norm)
            .ok_or_else(|| Error::BudgetExceeded("64-bit sum overflow".into()))?;
        Ok(())
    }
}

struct Searcher {
    dim: usize,
    n_max: usize,
    budget: u64,
    occ: Occupancy,
    pos: Vec<i64>,
}

impl Searcher {
    fn new(dim: usize, n_max: usize, budget: u64) -> Result<Self> {
        let mut occ = Occupancy::new(dim, n_max)?;
        let pos = vec![0i64; dim];
        occ.set(&pos);
        Ok(Searcher { dim, n_max, budget, occ, pos })
    }

    /// Walks `path` into the occupancy state (path holds step directions as
    /// (axis, sign) pairs applied from the origin).
    fn load_prefix(&mut self, prefix: &[(usize, i64)]) {
        for &(axis, sign) in prefix {
            self.pos[axis] += sign;
            self.occ.set(&self.pos);
        }
    }

    fn sq_norm(&self) -> u64 {
        self.pos.iter().map(|&c| (c * c) as u64).sum()
    }

    /// Depth-first extension of the current position from `depth` up to
    /// `n_max`, tallying every node visited.
    fn extend(&mut self, depth: usize, tally: &mut Tally) -> Result<()> {
        if depth == self.n_max {
            return Ok(());
        }
        for axis in 0..self.dim {
            for sign in [1i64, -1] {
                self.pos[axis] += sign;
                if !self.occ.occupied(&self.pos) {
                    tally.nodes += 1;
                    if tally.nodes > self.budget {
                        self.pos[axis] -= sign;
                        return Err(Error::BudgetExceeded(format!(
                            "node budget {} exhausted",
                            self.budget
                        )));
                    }
                    tally.record(depth + 1, self.sq_norm())?;
                    self.occ.set(&self.pos);
                    self.extend(depth + 1, tally)?;
                    self.occ.clear(&self.pos);
                }
                self.pos[axis] -= sign;
            }
        }
        Ok(())
    }
}

/// Enumerates all prefixes (as direction lists) of SAWs of length exactly
/// `depth`, starting from the given first steps (empty = all directions).
fn collect_prefixes(
    dim: usize,
    depth: usize,
    first_step: Option<(usize, i64)>,
) -> Vec<Vec<(usize, i64)>> {
    let mut out = Vec::new();
    let mut path: Vec<(usize, i64)> = Vec::new();
    let mut points: Vec<Vec<i64>> = vec![vec![0; dim]];

    fn rec(
        dim: usize,
        depth: usize,
        first: Option<(usize, i64)>,
        path: &mut Vec<(usize, i64)>,
        points: &mut Vec<Vec<i64>>,
        out: &mut Vec<Vec<(usize, i64)>>,
    ) {
        if path.len() == depth {
            out.push(path.clone());
            return;
        }
        for axis in 0..dim {
            for sign in [1i64, -1] {
                if path.is_empty() {
                    if let Some((fa, fs)) = first {
                        if axis != fa || sign != fs {
                            continue;
                        }
                    }
                }
                let mut next = points.last().unwrap().clone();
                next[axis] += sign;
                if points.contains(&next) {
                    continue;
                }
                path.push((axis, sign));
                points.push(next);
                rec(dim, depth, first, path, points, out);
                points.pop();
                path.pop();
            }
        }
    }
    rec(dim, depth, first_step, &mut path, &mut points, &mut out);
    out
}

/// Exact enumeration of SAW counts and squared-endpoint sums for all
/// lengths up to `n_max`.
///
/// With `use_symmetry` the first step is pinned to +e_1 and every tally is
/// multiplied by 2d afterwards; counts agree bit-exactly with the
/// unreduced mode.
pub fn enumerate_saws(dim: usize, n_max: usize, use_symmetry: bool) -> Result<EnumerationResult> {
    enumerate_saws_with(dim, &EnumConfig::new(n_max).symmetry(use_symmetry))
}

pub fn enumerate_saws_with(dim: usize, cfg: &EnumConfig) -> Result<EnumerationResult> {
    if dim < 1 {
        return Err(Error::InvalidDimension(dim));
    }
    let n_max = cfg.n_max;
    let first_step = if cfg.use_symmetry { Some((0usize, 1i64)) } else { None };

    // Shallow prefix pass: tallies all depths <= split and yields the
    // subtree roots handed to workers.
    let split = SPLIT_DEPTH.min(n_max);
    let mut shallow = Tally::new(n_max);
    shallow.record(0, 0)?; // the trivial walk
    let prefixes: Vec<Vec<(usize, i64)>> = {
        let mut all = Vec::new();
        for depth in 1..=split {
            let at_depth = collect_prefixes(dim, depth, first_step);
            if depth < split {
                for p in &at_depth {
                    let sq: u64 = endpoint_of(dim, p).iter().map(|&c| (c * c) as u64).sum();
                    shallow.nodes += 1;
                    shallow.record(depth, sq)?;
                }
            } else {
                for p in &at_depth {
                    let sq: u64 = endpoint_of(dim, p).iter().map(|&c| (c * c) as u64).sum();
                    shallow.nodes += 1;
                    shallow.record(depth, sq)?;
                }
                all = at_depth;
            }
        }
        all
    };

    // Budget is split evenly across subtrees; the shared total stays
    // bounded by cfg.node_budget and the outcome does not depend on
    // worker scheduling.
    let per_task_budget = if prefixes.is_empty() {
        cfg.node_budget
    } else {
        cfg.node_budget / prefixes.len() as u64
    };

    let partials: Vec<Result<Tally>> = prefixes
        .par_iter()
        .map(|prefix| {
            let mut searcher = Searcher::new(dim, n_max, per_task_budget)?;
            searcher.load_prefix(prefix);
            let mut tally = Tally::new(n_max);
            searcher.extend(prefix.len(), &mut tally)?;
            Ok(tally)
        })
        .collect();

    // Fixed-order aggregation into arbitrary-precision totals.
    let mut counts: Vec<BigUint> = vec![BigUint::zero(); n_max + 1];
    let mut sq_sums: Vec<BigUint> = vec![BigUint::zero(); n_max + 1];
    for n in 0..=n_max {
        counts[n] += shallow.counts[n];
        sq_sums[n] += shallow.sq_sums[n];
    }
    for partial in partials {
        let t = partial?;
        for n in 0..=n_max {
            counts[n] += t.counts[n];
            sq_sums[n] += t.sq_sums[n];
        }
    }

    if cfg.use_symmetry {
        let factor = BigUint::from(2 * dim);
        for n in 1..=n_max {
            counts[n] *= &factor;
            sq_sums[n] *= &factor;
        }
    }

    Ok(EnumerationResult {
        dim,
        counts,
        sq_end_sums: sq_sums,
        max_n: n_max,
    })
}

fn endpoint_of(dim: usize, prefix: &[(usize, i64)]) -> Vec<i64> {
    let mut pos = vec![0i64; dim];
    for &(axis, sign) in prefix {
        pos[axis] += sign;
    }
    pos
}

/// Fully materialized walk lists, for uniform sampling at small n.
pub struct WalkPool {
    pub dim: usize,
    walks_by_len: Vec<Vec<LatticeWalk>>,
}

impl WalkPool {
    /// Materializes every SAW of length <= n_max.
    pub fn materialize(dim: usize, n_max: usize) -> Result<Self> {
        if dim < 1 {
            return Err(Error::InvalidDimension(dim));
        }
        let mut walks_by_len: Vec<Vec<LatticeWalk>> = Vec::with_capacity(n_max + 1);
        for n in 0..=n_max {
            let prefixes = if n == 0 {
                vec![Vec::new()]
            } else {
                collect_prefixes(dim, n, None)
            };
            let walks = prefixes
                .iter()
                .map(|p| {
                    let mut pos = vec![0i64; dim];
                    let mut points = vec![LatticePoint::from(pos.clone())];
                    for &(axis, sign) in p {
                        pos[axis] += sign;
                        points.push(LatticePoint::from(pos.clone()));
                    }
                    LatticeWalk { dim, points }
                })
                .collect();
            walks_by_len.push(walks);
        }
        Ok(WalkPool { dim, walks_by_len })
    }

    pub fn count(&self, n: usize) -> Result<usize> {
        self.walks_by_len
            .get(n)
            .map(Vec::len)
            .ok_or(Error::NotMaterialized(n))
    }

    pub fn walks(&self, n: usize) -> Result<&[LatticeWalk]> {
        self.walks_by_len
            .get(n)
            .map(Vec::as_slice)
            .ok_or(Error::NotMaterialized(n))
    }

    /// Uniform draw from the materialized length-n walks, deterministic in
    /// the seed.
    pub fn sample_uniform(&self, n: usize, seed: u64) -> Result<LatticeWalk> {
        let walks = self.walks(n)?;
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let idx = rng.gen_range(0..walks.len());
        Ok(walks[idx].clone())
    }

    /// Uniform draws sharing one RNG stream; used for frequency tests.
    pub fn sample_many(&self, n: usize, seed: u64, draws: usize) -> Result<Vec<usize>> {
        let walks = self.walks(n)?;
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        Ok((0..draws).map(|_| rng.gen_range(0..walks.len())).collect())
    }
}

//! Set partitions of `[n]`, their arc diagrams, crossing/nesting and
//! indecomposability predicates, totally nested partitions, and the
//! bijection `phi` between noncrossing-nonnesting indecomposable partitions
//! and totally nested ones.
//!
//! The arc diagram of a partition joins each pair of elements that are
//! consecutive within a block, so a block `{1,4,6}` contributes arcs
//! `(1,4)` and `(4,6)`. Two arcs `(i1,j1)`, `(i2,j2)` cross when
//! `i1 < i2 < j1 < j2` and nest when `i1 < i2 < j2 < j1`.

use std::collections::BTreeSet;
use std::fmt;

use num_bigint::BigUint;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::series::{invert_transform, CoeffSeq};
use crate::util::DisjointSet;

/// A partition of `{1..n}` into disjoint nonempty blocks.
///
/// Canonical form everywhere: elements sorted within blocks, blocks sorted
/// by their minimum.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(try_from = "Vec<Vec<usize>>", into = "Vec<Vec<usize>>")]
pub struct SetPartition {
    n: usize,
    blocks: Vec<Vec<usize>>,
}

impl SetPartition {
    pub fn new(n: usize, blocks: Vec<Vec<usize>>) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidPartition("ground set must be nonempty".into()));
        }
        let mut seen = vec![false; n + 1];
        let mut count = 0;
        for block in &blocks {
            if block.is_empty() {
                return Err(Error::InvalidPartition("empty block".into()));
            }
            for &x in block {
                if x == 0 || x > n {
                    return Err(Error::InvalidPartition(format!("element {x} outside 1..{n}")));
                }
                if seen[x] {
                    return Err(Error::InvalidPartition(format!("element {x} repeated")));
                }
                seen[x] = true;
                count += 1;
            }
        }
        if count != n {
            return Err(Error::InvalidPartition(format!(
                "blocks cover {count} of {n} elements"
            )));
        }
        let mut blocks = blocks;
        for b in &mut blocks {
            b.sort_unstable();
        }
        blocks.sort();
        Ok(SetPartition { n, blocks })
    }

    /// Builds the partition whose consecutive-pair relation is `arcs`.
    pub fn from_arcs(n: usize, arcs: &BTreeSet<(usize, usize)>) -> Result<Self> {
        ArcDiagram::new(n, arcs.clone())?.to_partition()
    }

    /// Parses the compact block form `14|236|5` (single digits) or the
    /// delimited form `1,4|2,3,6|5`.
    pub fn parse(s: &str) -> Result<Self> {
        let mut blocks = Vec::new();
        let mut max = 0;
        for chunk in s.split('|') {
            let block: Vec<usize> = if chunk.contains(',') || chunk.contains(' ') {
                chunk
                    .split([',', ' '])
                    .filter(|t| !t.is_empty())
                    .map(|t| {
                        t.parse::<usize>()
                            .map_err(|_| Error::InvalidPartition(format!("bad token {t:?}")))
                    })
                    .collect::<Result<_>>()?
            } else {
                chunk
                    .chars()
                    .map(|c| {
                        c.to_digit(10)
                            .map(|d| d as usize)
                            .ok_or_else(|| Error::InvalidPartition(format!("bad digit {c:?}")))
                    })
                    .collect::<Result<_>>()?
            };
            max = max.max(block.iter().copied().max().unwrap_or(0));
            blocks.push(block);
        }
        SetPartition::new(max, blocks)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn blocks(&self) -> &[Vec<usize>] {
        &self.blocks
    }

    pub fn num_blocks(&self) -> usize {
        self.blocks.len()
    }

    /// Arcs joining consecutive elements of each block, sorted.
    pub fn arcs(&self) -> BTreeSet<(usize, usize)> {
        let mut arcs = BTreeSet::new();
        for block in &self.blocks {
            for pair in block.windows(2) {
                arcs.insert((pair[0], pair[1]));
            }
        }
        arcs
    }
}

impl TryFrom<Vec<Vec<usize>>> for SetPartition {
    type Error = Error;
    fn try_from(blocks: Vec<Vec<usize>>) -> Result<Self> {
        let n = blocks.iter().flatten().copied().max().unwrap_or(0);
        SetPartition::new(n, blocks)
    }
}

impl From<SetPartition> for Vec<Vec<usize>> {
    fn from(p: SetPartition) -> Self {
        p.blocks
    }
}

impl fmt::Display for SetPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let compact = self.n <= 9;
        for (i, block) in self.blocks.iter().enumerate() {
            if i > 0 {
                write!(f, "|")?;
            }
            for (j, x) in block.iter().enumerate() {
                if j > 0 && !compact {
                    write!(f, ",")?;
                }
                write!(f, "{x}")?;
            }
        }
        Ok(())
    }
}

/// The consecutive-element arc relation of some partition.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ArcDiagram {
    n: usize,
    arcs: BTreeSet<(usize, usize)>,
}

impl ArcDiagram {
    /// Validates that each element starts at most one arc and ends at most
    /// one arc, which is exactly the condition for the arcs to be the
    /// consecutive-pair relation of a partition.
    pub fn new(n: usize, arcs: BTreeSet<(usize, usize)>) -> Result<Self> {
        let mut starts = vec![false; n + 1];
        let mut ends = vec![false; n + 1];
        for &(i, j) in &arcs {
            if i == 0 || i >= j || j > n {
                return Err(Error::InvalidPartition(format!("arc ({i},{j}) outside 1..{n}")));
            }
            if starts[i] {
                return Err(Error::InvalidPartition(format!("two arcs start at {i}")));
            }
            if ends[j] {
                return Err(Error::InvalidPartition(format!("two arcs end at {j}")));
            }
            starts[i] = true;
            ends[j] = true;
        }
        Ok(ArcDiagram { n, arcs })
    }

    pub fn from_partition(p: &SetPartition) -> Self {
        ArcDiagram {
            n: p.n(),
            arcs: p.arcs(),
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn arcs(&self) -> &BTreeSet<(usize, usize)> {
        &self.arcs
    }

    pub fn to_partition(&self) -> Result<SetPartition> {
        let mut ds = DisjointSet::new(self.n + 1);
        for &(i, j) in &self.arcs {
            ds.union(i, j);
        }
        let blocks: Vec<Vec<usize>> = ds
            .groups()
            .into_iter()
            .filter(|g| g[0] != 0)
            .collect();
        SetPartition::new(self.n, blocks)
    }
}

/// Structural flags of a partition's arc diagram.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct PartitionFlags {
    pub crossing: bool,
    pub nesting: bool,
    pub indecomposable: bool,
    pub totally_nested: bool,
}

/// Computes crossing/nesting over arc pairs, indecomposability by prefix
/// analysis, and total nestedness from the block chain.
pub fn classify(p: &SetPartition) -> PartitionFlags {
    let arcs: Vec<(usize, usize)> = p.arcs().into_iter().collect();
    let mut crossing = false;
    let mut nesting = false;
    for (a, &(i1, j1)) in arcs.iter().enumerate() {
        for &(i2, j2) in &arcs[a + 1..] {
            let (i1, j1, i2, j2) = if i1 < i2 { (i1, j1, i2, j2) } else { (i2, j2, i1, j1) };
            if i1 < i2 && i2 < j1 && j1 < j2 {
                crossing = true;
            }
            if i1 < i2 && j2 < j1 {
                nesting = true;
            }
        }
    }

    // Decomposable iff some proper prefix {1..k} is a union of blocks, i.e.
    // every block lies entirely inside or outside the prefix.
    let mut block_of = vec![0usize; p.n() + 1];
    for (b, block) in p.blocks().iter().enumerate() {
        for &x in block {
            block_of[x] = b;
        }
    }
    let maxes: Vec<usize> = p.blocks().iter().map(|b| *b.last().unwrap()).collect();
    let mut indecomposable = true;
    let mut reach = 0;
    for k in 1..p.n() {
        reach = reach.max(maxes[block_of[k]]);
        if reach == k {
            indecomposable = false;
            break;
        }
    }

    let totally_nested = chain_is_totally_nested(p.blocks());

    PartitionFlags {
        crossing,
        nesting,
        indecomposable,
        totally_nested,
    }
}

/// Is `inner` wholly inside the span of two consecutive elements of `outer`?
fn nested_by(inner: &[usize], outer: &[usize]) -> bool {
    let lo = inner[0];
    let hi = *inner.last().unwrap();
    outer
        .windows(2)
        .any(|pair| pair[0] < lo && hi < pair[1])
}

// The chain order of a totally nested partition is forced: each block sits
// under an arc of its predecessor, so block minima strictly increase and
// sorting by minimum recovers the chain.
fn chain_is_totally_nested(blocks: &[Vec<usize>]) -> bool {
    blocks
        .windows(2)
        .all(|w| nested_by(&w[1], &w[0]))
}

/// A partition whose blocks form a chain `B_1, B_2, ...` with element 1 in `B_1` and
/// each block nested under an arc of the one before it.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(try_from = "SetPartition", into = "SetPartition")]
pub struct TotallyNestedPartition {
    partition: SetPartition,
}

impl TotallyNestedPartition {
    pub fn new(partition: SetPartition) -> Result<Self> {
        if !chain_is_totally_nested(partition.blocks()) {
            return Err(Error::NotTotallyNested);
        }
        Ok(TotallyNestedPartition { partition })
    }

    pub fn from_blocks(n: usize, blocks: Vec<Vec<usize>>) -> Result<Self> {
        TotallyNestedPartition::new(SetPartition::new(n, blocks)?)
    }

    pub fn n(&self) -> usize {
        self.partition.n()
    }

    /// Blocks in chain order (equivalently, sorted by minimum).
    pub fn chain(&self) -> &[Vec<usize>] {
        self.partition.blocks()
    }

    pub fn as_partition(&self) -> &SetPartition {
        &self.partition
    }

    pub fn into_partition(self) -> SetPartition {
        self.partition
    }
}

impl TryFrom<SetPartition> for TotallyNestedPartition {
    type Error = Error;
    fn try_from(p: SetPartition) -> Result<Self> {
        TotallyNestedPartition::new(p)
    }
}

impl From<TotallyNestedPartition> for SetPartition {
    fn from(t: TotallyNestedPartition) -> Self {
        t.partition
    }
}

impl fmt::Display for TotallyNestedPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.partition.fmt(f)
    }
}

/// Every set partition of `[n]`, in canonical order. Reference enumerator
/// for the brute-force cross-checks; Bell(n) grows fast, keep n modest.
pub fn enumerate_partitions(n: usize) -> Vec<SetPartition> {
    let mut out = Vec::new();
    let mut blocks: Vec<Vec<usize>> = Vec::new();
    fn rec(next: usize, n: usize, blocks: &mut Vec<Vec<usize>>, out: &mut Vec<SetPartition>) {
        if next > n {
            out.push(SetPartition {
                n,
                blocks: blocks.clone(),
            });
            return;
        }
        for i in 0..blocks.len() {
            blocks[i].push(next);
            rec(next + 1, n, blocks, out);
            blocks[i].pop();
        }
        blocks.push(vec![next]);
        rec(next + 1, n, blocks, out);
        blocks.pop();
    }
    rec(1, n, &mut blocks, &mut out);
    out.sort();
    out
}

/// All noncrossing, nonnesting, indecomposable partitions of `[n]`,
/// canonical order.
///
/// Generated by a depth-first search that extends blocks element by element
/// and prunes as soon as a new arc crosses or nests with an existing one;
/// indecomposability is filtered at the leaves.
pub fn enumerate_ncn_indecomposable(n: usize) -> Vec<SetPartition> {
    let mut out = Vec::new();
    let mut blocks: Vec<Vec<usize>> = Vec::new();
    let mut arcs: Vec<(usize, usize)> = Vec::new();
    ncn_rec(1, n, &mut blocks, &mut arcs, &mut out);
    let mut out: Vec<SetPartition> = out
        .into_iter()
        .filter(|p| classify(p).indecomposable)
        .collect();
    out.sort();
    out
}

fn ncn_rec(
    next: usize,
    n: usize,
    blocks: &mut Vec<Vec<usize>>,
    arcs: &mut Vec<(usize, usize)>,
    out: &mut Vec<SetPartition>,
) {
    if next > n {
        out.push(SetPartition {
            n,
            blocks: blocks.clone(),
        });
        return;
    }
    for i in 0..blocks.len() {
        let last = *blocks[i].last().unwrap();
        let new_arc = (last, next);
        let ok = arcs.iter().all(|&(a, b)| {
            let (i1, j1, i2, j2) = if a < last { (a, b, last, next) } else { (last, next, a, b) };
            let crossing = i1 < i2 && i2 < j1 && j1 < j2;
            let nesting = i1 < i2 && j2 < j1;
            !crossing && !nesting
        });
        if ok {
            blocks[i].push(next);
            arcs.push(new_arc);
            ncn_rec(next + 1, n, blocks, arcs, out);
            arcs.pop();
            blocks[i].pop();
        }
    }
    blocks.push(vec![next]);
    ncn_rec(next + 1, n, blocks, arcs, out);
    blocks.pop();
}

/// All totally nested partitions of `[n]`, canonical order.
///
/// Built recursively from the chain structure: the first block is a prefix
/// plus a suffix of the interval, and the remaining blocks form a totally
/// nested partition of the gap in between.
pub fn enumerate_totally_nested(n: usize) -> Vec<TotallyNestedPartition> {
    let mut out: Vec<TotallyNestedPartition> = tn_chains(1, n)
        .into_iter()
        .map(|chain| TotallyNestedPartition {
            partition: SetPartition {
                n,
                blocks: chain,
            },
        })
        .collect();
    out.sort();
    out
}

fn tn_chains(lo: usize, hi: usize) -> Vec<Vec<Vec<usize>>> {
    let mut out = vec![vec![(lo..=hi).collect::<Vec<usize>>()]];
    for a in lo..hi {
        for b in a + 2..=hi {
            let mut first: Vec<usize> = (lo..=a).collect();
            first.extend(b..=hi);
            for sub in tn_chains(a + 1, b - 1) {
                let mut chain = Vec::with_capacity(sub.len() + 1);
                chain.push(first.clone());
                chain.extend(sub);
                out.push(chain);
            }
        }
    }
    out
}

/// The bijection from noncrossing-nonnesting indecomposable partitions to
/// totally nested ones.
///
/// A one-block partition maps to itself. Otherwise the block containing 1
/// splits into maximal runs `R_1..R_k` with gaps `S_1..S_{k-1}` (the gaps
/// are exactly the singletons), and the image pairs the sequence
/// `R_1, S_1, R_2, ..., S_{k-1}, R_k` outside-in: entry `i` joins entry
/// `2k - i`, and the middle entry stands alone.
pub fn phi(p: &SetPartition) -> Result<TotallyNestedPartition> {
    let flags = classify(p);
    if flags.crossing || flags.nesting || !flags.indecomposable {
        return Err(Error::NotNcnIndecomposable);
    }
    if p.num_blocks() == 1 {
        return TotallyNestedPartition::new(p.clone());
    }
    let first = &p.blocks()[0];
    debug_assert!(p.blocks()[1..].iter().all(|b| b.len() == 1));

    let mut runs: Vec<Vec<usize>> = Vec::new();
    for &x in first {
        match runs.last_mut() {
            Some(run) if *run.last().unwrap() + 1 == x => run.push(x),
            _ => runs.push(vec![x]),
        }
    }
    let mut entries: Vec<Vec<usize>> = Vec::new();
    for (i, run) in runs.iter().enumerate() {
        entries.push(run.clone());
        if i + 1 < runs.len() {
            let gap: Vec<usize> = (run.last().unwrap() + 1..runs[i + 1][0]).collect();
            entries.push(gap);
        }
    }
    let m = entries.len();
    debug_assert_eq!(m % 2, 1);
    let mut blocks = Vec::new();
    for i in 0..m / 2 {
        let mut block = entries[i].clone();
        block.extend(&entries[m - 1 - i]);
        blocks.push(block);
    }
    blocks.push(entries[m / 2].clone());
    TotallyNestedPartition::new(SetPartition::new(p.n(), blocks)?)
}

/// Inverse of [`phi`]: odd-indexed chain blocks merge into the single
/// non-singleton block, even-indexed ones dissolve into singletons.
pub fn phi_inv(t: &TotallyNestedPartition) -> SetPartition {
    let chain = t.chain();
    if chain.len() == 1 {
        return t.as_partition().clone();
    }
    let mut big = Vec::new();
    let mut singletons = Vec::new();
    for (i, block) in chain.iter().enumerate() {
        if i % 2 == 0 {
            big.extend(block.iter().copied());
        } else {
            singletons.extend(block.iter().copied());
        }
    }
    let mut blocks = vec![big];
    blocks.extend(singletons.into_iter().map(|x| vec![x]));
    SetPartition::new(t.n(), blocks).expect("phi_inv output is a valid partition")
}

/// `NCN(n)` for `n = 1..=max_n`: counts of noncrossing-nonnesting
/// partitions, computed as the INVERT transform of the indecomposable
/// counts `1, 1, 2, 4, 8, ...` (which double from `n = 2` on).
pub fn ncn_counts(max_n: usize) -> Vec<BigUint> {
    let mut w = vec![num_bigint::BigInt::from(1)];
    if max_n >= 2 {
        w.push(num_bigint::BigInt::from(1));
    }
    while w.len() < max_n {
        let last = w.last().unwrap().clone();
        w.push(last * 2);
    }
    let seq = CoeffSeq::new(w).expect("max_n >= 1");
    invert_transform(&seq)
        .coeffs()
        .iter()
        .map(|c| c.to_biguint().expect("counts are nonnegative"))
        .collect()
}

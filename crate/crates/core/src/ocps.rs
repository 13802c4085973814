//! Order-consecutive partition sequences and their comma-slash string
//! codec, with the bijection to odd-index colored compositions.
//!
//! An ordered block sequence `S_1..S_p` of `[n]` is order-consecutive when
//! every prefix union is an interval. Such a sequence is encoded by
//! inserting `p-1` commas and `p-1` slashes into the gaps after the
//! symbols `1..n` (gap `i` follows symbol `i`; gap `n` is allowed),
//! alternating comma/slash from the left: commas cut `[n]` into chunks
//! sized like the blocks, and the stretch from comma `j` to slash `j`
//! counts how much of `S_{j+1}` lies left of the first `j` blocks.
//!
//! A totally nested partition, listed in reverse chain order, is an
//! order-consecutive sequence whose string never puts two marks in one gap
//! and never ends with a slash ([`xi`]). The full bijection
//! [`colored_to_ocps`] concatenates per-component strings with a
//! comma-slash pair at every junction, then slides each dotted-junction
//! slash right to the next comma (or to the end); [`colored_from_ocps`]
//! detects those slid slashes and walks the steps backwards.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::colorings::{ColoredComposition, Junction};
use crate::error::{Error, Result};
use crate::partitions::{SetPartition, TotallyNestedPartition};

/// An order-consecutive partition sequence of `[n]`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(try_from = "Vec<Vec<usize>>", into = "Vec<Vec<usize>>")]
pub struct Ocps {
    n: usize,
    blocks: Vec<Vec<usize>>,
}

impl Ocps {
    pub fn new(n: usize, blocks: Vec<Vec<usize>>) -> Result<Self> {
        if blocks.is_empty() {
            return Err(Error::InvalidOcps("no blocks".into()));
        }
        let mut seen = vec![false; n + 1];
        let mut covered = 0usize;
        let mut lo = usize::MAX;
        let mut hi = 0usize;
        for block in &blocks {
            if block.is_empty() {
                return Err(Error::InvalidOcps("empty block".into()));
            }
            for &x in block {
                if x == 0 || x > n {
                    return Err(Error::InvalidOcps(format!("element {x} outside 1..{n}")));
                }
                if seen[x] {
                    return Err(Error::InvalidOcps(format!("element {x} repeated")));
                }
                seen[x] = true;
                covered += 1;
                lo = lo.min(x);
                hi = hi.max(x);
            }
            if hi - lo + 1 != covered {
                return Err(Error::InvalidOcps(format!(
                    "prefix union {lo}..{hi} is not consecutive"
                )));
            }
        }
        if covered != n {
            return Err(Error::InvalidOcps(format!("blocks cover {covered} of {n}")));
        }
        let mut blocks = blocks;
        for b in &mut blocks {
            b.sort_unstable();
        }
        Ok(Ocps { n, blocks })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Blocks in sequence order.
    pub fn blocks(&self) -> &[Vec<usize>] {
        &self.blocks
    }

    pub fn num_blocks(&self) -> usize {
        self.blocks.len()
    }
}

impl TryFrom<Vec<Vec<usize>>> for Ocps {
    type Error = Error;
    fn try_from(blocks: Vec<Vec<usize>>) -> Result<Self> {
        let n = blocks.iter().flatten().copied().max().unwrap_or(0);
        Ocps::new(n, blocks)
    }
}

impl From<Ocps> for Vec<Vec<usize>> {
    fn from(o: Ocps) -> Self {
        o.blocks
    }
}

impl fmt::Display for Ocps {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, b) in self.blocks.iter().enumerate() {
            if i > 0 {
                write!(f, ";")?;
            }
            for (j, x) in b.iter().enumerate() {
                if j > 0 {
                    write!(f, ",")?;
                }
                write!(f, "{x}")?;
            }
        }
        Ok(())
    }
}

/// Comma and slash marks in the gaps of `1..n`.
///
/// `commas[j]` and `slashes[j]` are gap positions (gap `g` follows symbol
/// `g`); reading order alternates `c_1 s_1 c_2 s_2 ...`, so the invariant
/// is `c_j <= s_j <= c_{j+1}` with the commas strictly increasing. Two
/// marks in one gap render in reading order (`,/` or `/,`).
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CommaSlashString {
    n: usize,
    commas: Vec<usize>,
    slashes: Vec<usize>,
}

impl CommaSlashString {
    pub fn new(n: usize, commas: Vec<usize>, slashes: Vec<usize>) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidCommaSlash("empty symbol range".into()));
        }
        if commas.len() != slashes.len() {
            return Err(Error::InvalidCommaSlash(format!(
                "{} commas vs {} slashes",
                commas.len(),
                slashes.len()
            )));
        }
        for (&c, &s) in commas.iter().zip(&slashes) {
            if c == 0 || c > n || s == 0 || s > n {
                return Err(Error::InvalidCommaSlash(format!(
                    "mark outside gaps 1..{n}"
                )));
            }
            if s < c {
                return Err(Error::InvalidCommaSlash(format!(
                    "slash at {s} precedes its comma at {c}"
                )));
            }
        }
        for w in commas.windows(2) {
            if w[1] <= w[0] {
                return Err(Error::InvalidCommaSlash("commas must strictly increase".into()));
            }
        }
        for (&s, &c_next) in slashes.iter().zip(commas.iter().skip(1)) {
            if c_next < s {
                return Err(Error::InvalidCommaSlash(format!(
                    "comma at {c_next} precedes the slash at {s} before it"
                )));
            }
        }
        Ok(CommaSlashString { n, commas, slashes })
    }

    pub fn unmarked(n: usize) -> Result<Self> {
        CommaSlashString::new(n, Vec::new(), Vec::new())
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn commas(&self) -> &[usize] {
        &self.commas
    }

    pub fn slashes(&self) -> &[usize] {
        &self.slashes
    }

    pub fn num_pairs(&self) -> usize {
        self.commas.len()
    }

    /// No slash in the final gap and no two marks sharing a gap: the image
    /// characterization of [`xi`].
    pub fn is_nested_style(&self) -> bool {
        if self.slashes.last() == Some(&self.n) {
            return false;
        }
        for (&c, &s) in self.commas.iter().zip(&self.slashes) {
            if c == s {
                return false;
            }
        }
        for (&s, &c_next) in self.slashes.iter().zip(self.commas.iter().skip(1)) {
            if s == c_next {
                return false;
            }
        }
        true
    }

    /// Compact text `12,/3,45/,6/78,9/` for `n <= 9`; for larger `n` the
    /// symbols become space-separated decimal tokens with their marks
    /// attached, e.g. `1 2,/ 3 ... 10 11/`.
    pub fn to_text(&self) -> String {
        let mut marks_at: Vec<Vec<char>> = vec![Vec::new(); self.n + 1];
        for (&c, &s) in self.commas.iter().zip(&self.slashes) {
            marks_at[c].push(',');
            marks_at[s].push('/');
        }
        // within a gap, reading order: a slash paired with an earlier comma
        // precedes a comma that opens a later pair
        for g in 1..=self.n {
            if marks_at[g].len() == 2 && marks_at[g][0] == ',' {
                // determine true order from the pair indices
                let c_idx = self.commas.iter().position(|&c| c == g).unwrap();
                let s_here = self.slashes[c_idx] == g;
                if !s_here {
                    marks_at[g].reverse(); // the slash belongs to the previous pair
                }
            }
        }
        let compact = self.n <= 9;
        let mut out = String::new();
        for g in 1..=self.n {
            if !compact && g > 1 {
                out.push(' ');
            }
            out.push_str(&g.to_string());
            for &m in &marks_at[g] {
                out.push(m);
            }
        }
        out
    }

    /// Parses the output of [`to_text`].
    pub fn parse(s: &str) -> Result<Self> {
        let mut marks: Vec<(usize, char)> = Vec::new(); // (gap, mark) in reading order
        let mut n = 0usize;
        let mut cur = String::new();
        let flush = |cur: &mut String, n: &mut usize| -> Result<()> {
            if !cur.is_empty() {
                let sym: usize = cur
                    .parse()
                    .map_err(|_| Error::InvalidCommaSlash(format!("bad symbol {cur:?}")))?;
                let expected = *n + 1;
                if sym != expected {
                    return Err(Error::InvalidCommaSlash(format!(
                        "symbol {sym} where {expected} was expected"
                    )));
                }
                *n = sym;
                cur.clear();
            }
            Ok(())
        };
        let spaced = s.contains(' ');
        for ch in s.chars() {
            match ch {
                '0'..='9' => {
                    if !spaced {
                        // compact single-digit symbols
                        flush(&mut cur, &mut n)?;
                    }
                    cur.push(ch);
                }
                ',' | '/' => {
                    flush(&mut cur, &mut n)?;
                    if n == 0 {
                        return Err(Error::InvalidCommaSlash("mark before any symbol".into()));
                    }
                    marks.push((n, ch));
                }
                ' ' => flush(&mut cur, &mut n)?,
                other => {
                    return Err(Error::InvalidCommaSlash(format!("unexpected {other:?}")));
                }
            }
        }
        flush(&mut cur, &mut n)?;
        if n == 0 {
            return Err(Error::InvalidCommaSlash("no symbols".into()));
        }
        let mut commas = Vec::new();
        let mut slashes = Vec::new();
        for (i, (gap, mark)) in marks.iter().enumerate() {
            let want = if i % 2 == 0 { ',' } else { '/' };
            if *mark != want {
                return Err(Error::InvalidCommaSlash(format!(
                    "marks must alternate comma/slash; mark {i} is {mark:?}"
                )));
            }
            if *mark == ',' {
                commas.push(*gap);
            } else {
                slashes.push(*gap);
            }
        }
        CommaSlashString::new(n, commas, slashes)
    }
}

impl fmt::Display for CommaSlashString {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}

impl Serialize for CommaSlashString {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.serialize_str(&self.to_text())
    }
}

impl<'de> Deserialize<'de> for CommaSlashString {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        CommaSlashString::parse(&s).map_err(serde::de::Error::custom)
    }
}

/// Encodes an order-consecutive sequence: comma `j` closes a chunk of size
/// `|S_j|`, and slash `j` sits `L_j` symbols later, where `L_j` counts the
/// elements of `S_{j+1}` left of the first `j` blocks.
pub fn ocps_encode(o: &Ocps) -> CommaSlashString {
    let p = o.num_blocks();
    let mut commas = Vec::with_capacity(p - 1);
    let mut slashes = Vec::with_capacity(p - 1);
    let mut cum = 0usize;
    let mut lo = o.blocks()[0][0];
    for j in 0..p - 1 {
        cum += o.blocks()[j].len();
        commas.push(cum);
        let next = &o.blocks()[j + 1];
        let left = next.iter().filter(|&&x| x < lo).count();
        slashes.push(cum + left);
        lo = lo.min(next[0]);
    }
    CommaSlashString::new(o.n(), commas, slashes).expect("encoding preserves alternation")
}

/// Decodes a comma-slash string back to its ordered block sequence.
pub fn ocps_decode(s: &CommaSlashString) -> Result<Ocps> {
    let n = s.n();
    let p = s.num_pairs() + 1;
    // chunk sizes from the commas
    let mut sizes = Vec::with_capacity(p);
    let mut prev = 0;
    for &c in s.commas() {
        if c <= prev {
            return Err(Error::InvalidCommaSlash("commas out of order".into()));
        }
        sizes.push(c - prev);
        prev = c;
    }
    if prev >= n && p > 1 {
        return Err(Error::InvalidCommaSlash("final block would be empty".into()));
    }
    sizes.push(n - prev);
    // left/right extension counts from the slashes
    let mut blocks: Vec<Vec<usize>> = Vec::with_capacity(p);
    let total_left: usize = s
        .slashes()
        .iter()
        .zip(s.commas())
        .map(|(&sl, &c)| sl - c)
        .sum();
    let mut lo = 1 + total_left;
    let mut hi = lo + sizes[0] - 1;
    if hi > n {
        return Err(Error::InvalidCommaSlash("first block overflows the range".into()));
    }
    blocks.push((lo..=hi).collect());
    for j in 0..p - 1 {
        let left = s.slashes()[j] - s.commas()[j];
        let right_bound = if j + 1 < p - 1 { s.commas()[j + 1] } else { n };
        let right = right_bound - s.slashes()[j];
        if left + right != sizes[j + 1] {
            return Err(Error::InvalidCommaSlash(format!(
                "block {} has size {} but extends by {left}+{right}",
                j + 2,
                sizes[j + 1]
            )));
        }
        if left > lo - 1 || hi + right > n {
            return Err(Error::InvalidCommaSlash("extension leaves 1..n".into()));
        }
        let mut block: Vec<usize> = (lo - left..lo).collect();
        block.extend(hi + 1..=hi + right);
        lo -= left;
        hi += right;
        blocks.push(block);
    }
    if lo != 1 || hi != n {
        return Err(Error::InvalidCommaSlash("blocks do not cover 1..n".into()));
    }
    Ocps::new(n, blocks)
}

/// Encodes a totally nested partition as the comma-slash string of its
/// chain read in reverse order. The output never ends with a slash and
/// never holds two marks in one gap.
pub fn xi(t: &TotallyNestedPartition) -> CommaSlashString {
    let mut blocks: Vec<Vec<usize>> = t.chain().to_vec();
    blocks.reverse();
    let o = Ocps::new(t.n(), blocks).expect("reversed chains are order-consecutive");
    let s = ocps_encode(&o);
    debug_assert!(s.is_nested_style());
    s
}

/// Inverse of [`xi`]; the input must be in the restricted style.
pub fn xi_inv(s: &CommaSlashString) -> Result<TotallyNestedPartition> {
    if !s.is_nested_style() {
        return Err(Error::InvalidCommaSlash(
            "string ends with a slash or has adjacent marks".into(),
        ));
    }
    let o = ocps_decode(s)?;
    let mut blocks: Vec<Vec<usize>> = o.blocks().to_vec();
    blocks.reverse();
    TotallyNestedPartition::new(SetPartition::new(s.n(), blocks)?)
}

/// Maps an odd-index colored composition to its order-consecutive
/// partition sequence:
///
/// 1. encode each chain component with [`xi`] and shift into its global
///    interval;
/// 2. put a comma-slash pair in every junction gap;
/// 3. slide each dotted-junction slash right to the gap of the next comma
///    (or to gap `n` if none follows);
/// 4. decode.
pub fn colored_to_ocps(cc: &ColoredComposition) -> Result<Ocps> {
    let (comps, junctions) = cc.decorated_chain()?;
    let n = cc.n();
    let mut commas = Vec::new();
    let mut slashes = Vec::new();
    let mut dotted_slash_idx = Vec::new(); // pair indices to slide
    let mut offset = 0usize;
    for (i, comp) in comps.iter().enumerate() {
        let local = xi(comp);
        for (&c, &s) in local.commas().iter().zip(local.slashes()) {
            commas.push(offset + c);
            slashes.push(offset + s);
        }
        offset += comp.n();
        if i + 1 < comps.len() {
            if junctions[i] == Junction::Dotted {
                dotted_slash_idx.push(commas.len());
            }
            commas.push(offset);
            slashes.push(offset);
        }
    }
    // slide: a dotted-junction slash moves to the next comma's gap, or to
    // the final gap when no comma follows
    for &idx in &dotted_slash_idx {
        slashes[idx] = if idx + 1 < commas.len() {
            commas[idx + 1]
        } else {
            n
        };
    }
    // slides never cross: the alternation invariant must survive
    let s = CommaSlashString::new(n, commas, slashes)
        .map_err(|e| Error::InvalidOcps(format!("slide broke alternation: {e}")))?;
    ocps_decode(&s)
}

/// Inverse of [`colored_to_ocps`]: detects slid slashes (a slash sharing a
/// gap with the *following* comma, or sitting in the final gap), walks them
/// back onto their commas, splits at the junction pairs, and decodes each
/// component with [`xi_inv`].
pub fn colored_from_ocps(o: &Ocps) -> Result<ColoredComposition> {
    let s = ocps_encode(o);
    let n = s.n();
    let p = s.num_pairs();
    let commas = s.commas().to_vec();
    let mut slashes = s.slashes().to_vec();

    // identify dotted (slid) slashes and un-slide them onto their commas
    let mut dotted = vec![false; p];
    for j in 0..p {
        let slid = (j + 1 < p && slashes[j] == commas[j + 1]) || (j + 1 == p && slashes[j] == n);
        if slid {
            dotted[j] = true;
            slashes[j] = commas[j];
        }
    }

    // junction pairs now sit as comma+slash in one gap; everything else is
    // component-internal structure
    let mut comps = Vec::new();
    let mut junctions = Vec::new();
    let mut start_gap = 0usize; // component covers symbols start_gap+1 ..= junction gap
    let mut local_commas = Vec::new();
    let mut local_slashes = Vec::new();
    for j in 0..=p {
        let is_junction = j < p && commas[j] == slashes[j];
        let at_end = j == p;
        if is_junction || at_end {
            let end = if at_end { n } else { commas[j] };
            let len = end - start_gap;
            if len == 0 {
                return Err(Error::InvalidOcps("empty chain component".into()));
            }
            let local = CommaSlashString::new(
                len,
                std::mem::take(&mut local_commas),
                std::mem::take(&mut local_slashes),
            )
            .map_err(|e| Error::InvalidOcps(format!("component codec: {e}")))?;
            comps.push(xi_inv(&local)?);
            if !at_end {
                junctions.push(if dotted[j] {
                    Junction::Dotted
                } else {
                    Junction::Solid
                });
                start_gap = end;
            }
        } else {
            local_commas.push(commas[j] - start_gap);
            local_slashes.push(slashes[j] - start_gap);
        }
    }
    ColoredComposition::from_decorated_chain(comps, junctions)
}

/// All order-consecutive partition sequences of `[n]`: the first block is
/// an interval, and every later block extends the current interval by a
/// left part and a right part. Ordered by first interval, then extension
/// choices, depth first. Capped at `n <= 9`.
pub fn enumerate_ocps(n: usize) -> Result<Vec<Ocps>> {
    const CAP: usize = 9;
    if n == 0 || n > CAP {
        return Err(Error::OracleScale {
            what: "order-consecutive partition sequences",
            cap: CAP,
            n,
        });
    }
    let mut out = Vec::new();
    for lo in 1..=n {
        for hi in lo..=n {
            let mut blocks = vec![(lo..=hi).collect::<Vec<usize>>()];
            extend_ocps(n, lo, hi, &mut blocks, &mut out);
        }
    }
    Ok(out)
}

fn extend_ocps(n: usize, lo: usize, hi: usize, blocks: &mut Vec<Vec<usize>>, out: &mut Vec<Ocps>) {
    if lo == 1 && hi == n {
        out.push(Ocps {
            n,
            blocks: blocks.clone(),
        });
        return;
    }
    for left in 0..lo {
        for right in 0..=(n - hi) {
            if left + right == 0 {
                continue;
            }
            let mut block: Vec<usize> = (lo - left..lo).collect();
            block.extend(hi + 1..=hi + right);
            blocks.push(block);
            extend_ocps(n, lo - left, hi + right, blocks, out);
            blocks.pop();
        }
    }
}

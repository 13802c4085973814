//! The five Fibonacci coloring schemes.
//!
//! Part `k` of a composition takes `F_{k+1}`, `F_k`, `F_{k-1}`, `F_{2k}`,
//! or `F_{2k-1}` colors depending on the scheme, and each color is stored
//! as a concrete structure of total size `k`:
//!
//! - `FibPlus1`, `Fib`, `FibMinus1` - a secondary tiling of the part, i.e.
//!   a composition of `k` from the matching restricted family (parts in
//!   {1,2}, odd parts, parts >= 2);
//! - `FibEven` - a spotted tiling: tiles of any length, each carrying one
//!   spot, `F_{2k}` in total;
//! - `FibOdd` - a chain of totally nested partitions covering the part,
//!   `F_{2k-1}` in total.
//!
//! On the board of a colored composition, part boundaries are solid
//! separators and all intra-part structure boundaries are dotted; spots and
//! arcs carry the remaining color data. [`to_board`] and [`from_board`]
//! convert losslessly in both directions.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use num_bigint::BigUint;
use serde::{Deserialize, Serialize};

use crate::comp::{enumerate_family, fibonacci, Board, Composition, RestrictedFamily, SeparatorKind};
use crate::error::{Error, Result};
use crate::partitions::{enumerate_totally_nested, ArcDiagram, TotallyNestedPartition};
use crate::util::compositions_with;

/// Which slice of the Fibonacci numbers colors the parts.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum ColorScheme {
    /// Part `k` takes `F_{k+1}` colors (secondary tilings with parts 1, 2).
    FibPlus1,
    /// Part `k` takes `F_k` colors (secondary tilings with odd parts).
    Fib,
    /// Part `k` takes `F_{k-1}` colors (secondary tilings with parts >= 2);
    /// part 1 has no colors at all.
    FibMinus1,
    /// Part `k` takes `F_{2k}` colors (spotted tilings).
    FibEven,
    /// Part `k` takes `F_{2k-1}` colors (totally nested partition chains).
    FibOdd,
}

impl ColorScheme {
    pub const ALL: [ColorScheme; 5] = [
        ColorScheme::FibPlus1,
        ColorScheme::Fib,
        ColorScheme::FibMinus1,
        ColorScheme::FibEven,
        ColorScheme::FibOdd,
    ];

    /// The restricted family whose compositions serve as secondary tilings,
    /// for the three schemes that have one.
    pub fn secondary_family(self) -> Option<RestrictedFamily> {
        match self {
            ColorScheme::FibPlus1 => Some(RestrictedFamily::OneTwo),
            ColorScheme::Fib => Some(RestrictedFamily::Odd),
            ColorScheme::FibMinus1 => Some(RestrictedFamily::GreaterThanOne),
            _ => None,
        }
    }

    /// Smallest part size with at least one color.
    pub fn min_part(self) -> usize {
        match self {
            ColorScheme::FibMinus1 => 2,
            _ => 1,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            ColorScheme::FibPlus1 => "fib-plus1",
            ColorScheme::Fib => "fib",
            ColorScheme::FibMinus1 => "fib-minus1",
            ColorScheme::FibEven => "fib-even",
            ColorScheme::FibOdd => "fib-odd",
        }
    }

    pub fn parse(s: &str) -> Option<Self> {
        ColorScheme::ALL.into_iter().find(|c| c.name() == s)
    }
}

impl fmt::Display for ColorScheme {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// A 1 x len tile with one marked cell, `1 <= spot <= len`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct SpottedTile {
    pub len: usize,
    pub spot: usize,
}

/// Junction between two chain components of an odd-index colored board.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Junction {
    /// Joins components inside one part.
    Dotted,
    /// Separates parts.
    Solid,
}

/// Color payload attached to one part.
///
/// Comparison order (used for canonical enumeration): secondary tilings by
/// part sequence; spotted tilings by their `(len, spot)` sequence;
/// partition chains componentwise, each partition by size then block list.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Color {
    Secondary(Composition),
    Spotted(Vec<SpottedTile>),
    Decorated(Vec<TotallyNestedPartition>),
}

impl Color {
    /// Total size covered by the payload.
    pub fn size(&self) -> usize {
        match self {
            Color::Secondary(c) => c.total(),
            Color::Spotted(tiles) => tiles.iter().map(|t| t.len).sum(),
            Color::Decorated(comps) => comps.iter().map(|p| p.n()).sum(),
        }
    }

    fn validate(&self, scheme: ColorScheme, part: usize) -> Result<()> {
        let bad = |msg: String| Err(Error::InvalidColor(msg));
        match (scheme, self) {
            (ColorScheme::FibPlus1 | ColorScheme::Fib | ColorScheme::FibMinus1, Color::Secondary(sec)) => {
                let family = scheme.secondary_family().unwrap();
                family.check(sec)?;
                if sec.total() != part {
                    return bad(format!(
                        "secondary tiling of {} under part {part}",
                        sec.total()
                    ));
                }
                Ok(())
            }
            (ColorScheme::FibEven, Color::Spotted(tiles)) => {
                if tiles.is_empty() {
                    return bad("empty spotted tiling".into());
                }
                for t in tiles {
                    if t.len == 0 || t.spot == 0 || t.spot > t.len {
                        return bad(format!("spot {} outside tile of length {}", t.spot, t.len));
                    }
                }
                let total: usize = tiles.iter().map(|t| t.len).sum();
                if total != part {
                    return bad(format!("spotted tiling of {total} under part {part}"));
                }
                Ok(())
            }
            (ColorScheme::FibOdd, Color::Decorated(comps)) => {
                if comps.is_empty() {
                    return bad("empty partition chain".into());
                }
                let total: usize = comps.iter().map(|p| p.n()).sum();
                if total != part {
                    return bad(format!("partition chain of {total} under part {part}"));
                }
                Ok(())
            }
            _ => bad(format!("payload kind does not match scheme {scheme}")),
        }
    }
}

/// Number of colors available to part `k` under the scheme.
pub fn color_count(scheme: ColorScheme, k: usize) -> BigUint {
    assert!(k >= 1, "parts are positive");
    let k = k as u64;
    match scheme {
        ColorScheme::FibPlus1 => fibonacci(k + 1),
        ColorScheme::Fib => fibonacci(k),
        ColorScheme::FibMinus1 => fibonacci(k - 1),
        ColorScheme::FibEven => fibonacci(2 * k),
        ColorScheme::FibOdd => fibonacci(2 * k - 1),
    }
}

/// All colors of part `k`, in canonical order (see [`Color`]). Empty only
/// for `FibMinus1` with `k = 1`.
pub fn enumerate_colors(scheme: ColorScheme, k: usize) -> Vec<Color> {
    match scheme {
        ColorScheme::FibPlus1 | ColorScheme::Fib | ColorScheme::FibMinus1 => {
            let family = scheme.secondary_family().unwrap();
            enumerate_family(family, k)
                .into_iter()
                .map(Color::Secondary)
                .collect()
        }
        ColorScheme::FibEven => {
            let mut out = Vec::new();
            for lens in compositions_with(k, |_| true) {
                let mut spots = vec![1usize; lens.len()];
                loop {
                    let tiles = lens
                        .iter()
                        .zip(&spots)
                        .map(|(&len, &spot)| SpottedTile { len, spot })
                        .collect();
                    out.push(Color::Spotted(tiles));
                    // odometer over spot positions, rightmost fastest
                    let mut carry = true;
                    for i in (0..lens.len()).rev() {
                        if spots[i] < lens[i] {
                            spots[i] += 1;
                            carry = false;
                            break;
                        }
                        spots[i] = 1;
                    }
                    if carry {
                        break;
                    }
                }
            }
            finish_colors(out)
        }
        ColorScheme::FibOdd => {
            let mut out = Vec::new();
            let tn_by_size: Vec<Vec<TotallyNestedPartition>> =
                (0..=k).map(|m| if m == 0 { Vec::new() } else { enumerate_totally_nested(m) }).collect();
            for sizes in compositions_with(k, |_| true) {
                let mut idx = vec![0usize; sizes.len()];
                loop {
                    let comps: Vec<TotallyNestedPartition> = sizes
                        .iter()
                        .zip(&idx)
                        .map(|(&s, &i)| tn_by_size[s][i].clone())
                        .collect();
                    out.push(Color::Decorated(comps));
                    let mut carry = true;
                    for i in (0..sizes.len()).rev() {
                        idx[i] += 1;
                        if idx[i] < tn_by_size[sizes[i]].len() {
                            carry = false;
                            break;
                        }
                        idx[i] = 0;
                    }
                    if carry {
                        break;
                    }
                }
            }
            finish_colors(out)
        }
    }
}

fn finish_colors(mut out: Vec<Color>) -> Vec<Color> {
    out.sort();
    out
}

/// A composition together with a color for each part.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(try_from = "ColoredRepr", into = "ColoredRepr")]
pub struct ColoredComposition {
    scheme: ColorScheme,
    items: Vec<(usize, Color)>,
}

impl ColoredComposition {
    pub fn new(scheme: ColorScheme, items: Vec<(usize, Color)>) -> Result<Self> {
        if items.is_empty() {
            return Err(Error::EmptyComposition);
        }
        for (part, color) in &items {
            if *part == 0 {
                return Err(Error::ZeroPart);
            }
            color.validate(scheme, *part)?;
        }
        Ok(ColoredComposition { scheme, items })
    }

    pub fn scheme(&self) -> ColorScheme {
        self.scheme
    }

    pub fn items(&self) -> &[(usize, Color)] {
        &self.items
    }

    pub fn n(&self) -> usize {
        self.items.iter().map(|(p, _)| p).sum()
    }

    /// The underlying uncolored composition.
    pub fn composition(&self) -> Composition {
        Composition::new(self.items.iter().map(|(p, _)| *p).collect())
            .expect("items validated at construction")
    }

    /// For `FibOdd`: the flattened chain of totally nested components with
    /// the junction between each consecutive pair (dotted inside a part,
    /// solid across a part boundary).
    pub fn decorated_chain(&self) -> Result<(Vec<TotallyNestedPartition>, Vec<Junction>)> {
        if self.scheme != ColorScheme::FibOdd {
            return Err(Error::SchemeMismatch {
                expected: ColorScheme::FibOdd,
                got: self.scheme,
            });
        }
        let mut comps = Vec::new();
        let mut junctions = Vec::new();
        for (i, (_, color)) in self.items.iter().enumerate() {
            let Color::Decorated(parts) = color else {
                unreachable!("validated at construction")
            };
            if i > 0 {
                junctions.push(Junction::Solid);
            }
            for (j, c) in parts.iter().enumerate() {
                if j > 0 {
                    junctions.push(Junction::Dotted);
                }
                comps.push(c.clone());
            }
        }
        Ok((comps, junctions))
    }

    /// Rebuilds a `FibOdd` colored composition from a component chain:
    /// solid junctions split parts, dotted junctions join components within
    /// a part.
    pub fn from_decorated_chain(
        comps: Vec<TotallyNestedPartition>,
        junctions: Vec<Junction>,
    ) -> Result<Self> {
        if comps.is_empty() {
            return Err(Error::EmptyComposition);
        }
        if junctions.len() + 1 != comps.len() {
            return Err(Error::InvalidColor(format!(
                "{} junctions for {} components",
                junctions.len(),
                comps.len()
            )));
        }
        let mut items = Vec::new();
        let mut group: Vec<TotallyNestedPartition> = Vec::new();
        for (i, comp) in comps.into_iter().enumerate() {
            if i > 0 && junctions[i - 1] == Junction::Solid {
                let part = group.iter().map(|p| p.n()).sum();
                items.push((part, Color::Decorated(std::mem::take(&mut group))));
            }
            group.push(comp);
        }
        let part = group.iter().map(|p| p.n()).sum();
        items.push((part, Color::Decorated(group)));
        ColoredComposition::new(ColorScheme::FibOdd, items)
    }
}

#[derive(Serialize, Deserialize)]
struct ColoredRepr {
    scheme: ColorScheme,
    parts: Vec<PartRepr>,
}

#[derive(Serialize, Deserialize)]
struct PartRepr {
    size: usize,
    color: ColorRepr,
}

#[derive(Serialize, Deserialize)]
#[serde(untagged)]
enum ColorRepr {
    Decorated(Vec<DecoratedTileRepr>),
    Spotted(Vec<(usize, usize)>),
    Secondary(Vec<usize>),
}

#[derive(Serialize, Deserialize)]
struct DecoratedTileRepr {
    partition: Vec<Vec<usize>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    junction: Option<Junction>,
}

impl TryFrom<ColoredRepr> for ColoredComposition {
    type Error = Error;
    fn try_from(r: ColoredRepr) -> Result<Self> {
        let mut items = Vec::new();
        for part in r.parts {
            let color = match part.color {
                ColorRepr::Secondary(parts) => Color::Secondary(Composition::new(parts)?),
                ColorRepr::Spotted(tiles) => Color::Spotted(
                    tiles
                        .into_iter()
                        .map(|(len, spot)| SpottedTile { len, spot })
                        .collect(),
                ),
                ColorRepr::Decorated(tiles) => {
                    let last = tiles.len().saturating_sub(1);
                    let mut comps = Vec::new();
                    for (i, tile) in tiles.into_iter().enumerate() {
                        match tile.junction {
                            Some(Junction::Dotted) if i < last => {}
                            None if i == last => {}
                            _ => {
                                return Err(Error::InvalidColor(
                                    "component junctions inside one part must be dotted, \
                                     with the last omitted"
                                        .into(),
                                ))
                            }
                        }
                        let n = tile.partition.iter().flatten().copied().max().unwrap_or(0);
                        comps.push(TotallyNestedPartition::from_blocks(n, tile.partition)?);
                    }
                    Color::Decorated(comps)
                }
            };
            items.push((part.size, color));
        }
        ColoredComposition::new(r.scheme, items)
    }
}

impl From<ColoredComposition> for ColoredRepr {
    fn from(cc: ColoredComposition) -> Self {
        let parts = cc
            .items
            .into_iter()
            .map(|(size, color)| {
                let color = match color {
                    Color::Secondary(sec) => ColorRepr::Secondary(sec.into_parts()),
                    Color::Spotted(tiles) => {
                        ColorRepr::Spotted(tiles.into_iter().map(|t| (t.len, t.spot)).collect())
                    }
                    Color::Decorated(comps) => {
                        let last = comps.len() - 1;
                        ColorRepr::Decorated(
                            comps
                                .into_iter()
                                .enumerate()
                                .map(|(i, p)| DecoratedTileRepr {
                                    partition: p.into_partition().into(),
                                    junction: (i < last).then_some(Junction::Dotted),
                                })
                                .collect(),
                        )
                    }
                };
                PartRepr { size, color }
            })
            .collect();
        ColoredRepr {
            scheme: cc.scheme,
            parts,
        }
    }
}

/// Counts of colored compositions of `1..=max_n` via the INVERT recurrence
/// `W_n = w_n + sum_{j=1}^{n-1} w_j W_{n-j}` on the color counts `w`.
pub fn counts_colored(scheme: ColorScheme, max_n: usize) -> Vec<BigUint> {
    let w: Vec<BigUint> = (1..=max_n).map(|k| color_count(scheme, k)).collect();
    let mut counts: Vec<BigUint> = Vec::with_capacity(max_n);
    for n in 1..=max_n {
        let mut acc = w[n - 1].clone();
        for j in 1..n {
            acc += &w[j - 1] * &counts[n - j - 1];
        }
        counts.push(acc);
    }
    counts
}

/// Count of colored compositions of `n` under the scheme.
pub fn count_colored(scheme: ColorScheme, n: usize) -> BigUint {
    counts_colored(scheme, n).pop().expect("n >= 1")
}

/// Streaming enumeration of all colored compositions of `n`, ordered
/// lexicographically by part sequence, then componentwise by canonical
/// color order.
pub fn enumerate_colored(scheme: ColorScheme, n: usize) -> ColoredIter {
    let comps = compositions_with(n, |p| p >= scheme.min_part());
    let colors = (0..=n)
        .map(|k| {
            if k >= scheme.min_part() {
                enumerate_colors(scheme, k)
            } else {
                Vec::new()
            }
        })
        .collect();
    ColoredIter {
        scheme,
        comps,
        colors,
        comp_idx: 0,
        color_idx: Vec::new(),
        fresh: true,
    }
}

/// Iterator over colored compositions; see [`enumerate_colored`].
pub struct ColoredIter {
    scheme: ColorScheme,
    comps: Vec<Vec<usize>>,
    colors: Vec<Vec<Color>>,
    comp_idx: usize,
    color_idx: Vec<usize>,
    fresh: bool,
}

impl Iterator for ColoredIter {
    type Item = ColoredComposition;

    fn next(&mut self) -> Option<Self::Item> {
        if self.comp_idx >= self.comps.len() {
            return None;
        }
        if self.fresh {
            self.color_idx = vec![0; self.comps[self.comp_idx].len()];
            self.fresh = false;
        }
        let parts = &self.comps[self.comp_idx];
        let items: Vec<(usize, Color)> = parts
            .iter()
            .zip(&self.color_idx)
            .map(|(&p, &i)| (p, self.colors[p][i].clone()))
            .collect();
        let item = ColoredComposition {
            scheme: self.scheme,
            items,
        };
        // advance the odometer, rightmost position fastest
        let mut carried = true;
        for i in (0..parts.len()).rev() {
            self.color_idx[i] += 1;
            if self.color_idx[i] < self.colors[parts[i]].len() {
                carried = false;
                break;
            }
            self.color_idx[i] = 0;
        }
        if carried {
            self.comp_idx += 1;
            self.fresh = true;
        }
        Some(item)
    }
}

/// Draws the colored composition on its board: solid separators at part
/// boundaries, dotted separators at intra-part structure boundaries, spots
/// or arcs carrying the rest of the color data.
pub fn to_board(cc: &ColoredComposition) -> Board {
    let n = cc.n();
    let mut separators = BTreeMap::new();
    let mut spots = BTreeSet::new();
    let mut arcs = BTreeSet::new();
    let mut offset = 0;
    for (part, color) in cc.items() {
        if offset > 0 {
            separators.insert(offset, SeparatorKind::Solid);
        }
        match color {
            Color::Secondary(sec) => {
                let mut at = offset;
                for &t in &sec.parts()[..sec.num_parts() - 1] {
                    at += t;
                    separators.insert(at, SeparatorKind::Dotted);
                }
            }
            Color::Spotted(tiles) => {
                let mut at = offset;
                for (i, tile) in tiles.iter().enumerate() {
                    spots.insert(at + tile.spot);
                    at += tile.len;
                    if i + 1 < tiles.len() {
                        separators.insert(at, SeparatorKind::Dotted);
                    }
                }
            }
            Color::Decorated(comps) => {
                let mut at = offset;
                for (i, comp) in comps.iter().enumerate() {
                    for &(a, b) in comp.as_partition().arcs().iter() {
                        arcs.insert((at + a, at + b));
                    }
                    at += comp.n();
                    if i + 1 < comps.len() {
                        separators.insert(at, SeparatorKind::Dotted);
                    }
                }
            }
        }
        offset += part;
    }
    Board::new(n, separators, spots, arcs).expect("colored compositions draw valid boards")
}

/// Reconstructs the colored composition a board encodes under the given
/// scheme. Exact inverse of [`to_board`].
pub fn from_board(board: &Board, scheme: ColorScheme) -> Result<ColoredComposition> {
    let parts = board.segments(SeparatorKind::Solid);
    let mut items = Vec::new();
    match scheme {
        ColorScheme::FibPlus1 | ColorScheme::Fib | ColorScheme::FibMinus1 => {
            if !board.spots().is_empty() || !board.arcs().is_empty() {
                return Err(Error::InvalidBoard(format!(
                    "scheme {scheme} admits neither spots nor arcs"
                )));
            }
            for (s, e) in parts {
                let tiles = split_segment(board, s, e);
                let sec = Composition::new(tiles.iter().map(|&(a, b)| b - a + 1).collect())?;
                items.push((e - s + 1, Color::Secondary(sec)));
            }
        }
        ColorScheme::FibEven => {
            if !board.arcs().is_empty() {
                return Err(Error::InvalidBoard("spotted boards have no arcs".into()));
            }
            for (s, e) in parts {
                let mut tiles = Vec::new();
                for (a, b) in split_segment(board, s, e) {
                    let in_tile: Vec<usize> = board
                        .spots()
                        .iter()
                        .copied()
                        .filter(|&c| a <= c && c <= b)
                        .collect();
                    if in_tile.len() != 1 {
                        return Err(Error::InvalidBoard(format!(
                            "tile {a}..{b} holds {} spots, wants exactly one",
                            in_tile.len()
                        )));
                    }
                    tiles.push(SpottedTile {
                        len: b - a + 1,
                        spot: in_tile[0] - a + 1,
                    });
                }
                items.push((e - s + 1, Color::Spotted(tiles)));
            }
        }
        ColorScheme::FibOdd => {
            if !board.spots().is_empty() {
                return Err(Error::InvalidBoard("arc boards have no spots".into()));
            }
            for (s, e) in parts {
                let mut comps = Vec::new();
                for (a, b) in split_segment(board, s, e) {
                    let local: BTreeSet<(usize, usize)> = board
                        .arcs()
                        .iter()
                        .copied()
                        .filter(|&(i, _)| a <= i && i <= b)
                        .map(|(i, j)| {
                            if j > b {
                                Err(Error::InvalidBoard(format!(
                                    "arc ({i},{j}) crosses the separator at {b}"
                                )))
                            } else {
                                Ok((i - a + 1, j - a + 1))
                            }
                        })
                        .collect::<Result<_>>()?;
                    let partition = ArcDiagram::new(b - a + 1, local)?.to_partition()?;
                    comps.push(TotallyNestedPartition::new(partition)?);
                }
                items.push((e - s + 1, Color::Decorated(comps)));
            }
        }
    }
    ColoredComposition::new(scheme, items)
}

/// Tiles of a part: the dotted cuts strictly inside cells `s..=e`.
fn split_segment(board: &Board, s: usize, e: usize) -> Vec<(usize, usize)> {
    let mut tiles = Vec::new();
    let mut start = s;
    for p in s..e {
        if board.separator_at(p) == Some(SeparatorKind::Dotted) {
            tiles.push((start, p));
            start = p + 1;
        }
    }
    tiles.push((start, e));
    tiles
}

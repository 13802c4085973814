//! Restricted 2-colored compositions.
//!
//! A 2-composition gives every part one of two colors, with the first part
//! forced to color 1. Flattening a colored board into its full tile
//! sequence (primary parts cut by their secondary tilings) and coloring
//! each tile by the separator on its left - color 1 for the board edge or
//! a solid separator, color 2 for a dotted one - matches each secondary
//! tiling scheme with the 2-compositions over the same part restriction.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::colorings::{Color, ColorScheme, ColoredComposition};
use crate::comp::{Composition, RestrictedFamily};
use crate::error::{Error, Result};
use crate::util::compositions_with;

/// Part color of a 2-composition.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum TwoColor {
    One = 1,
    Two = 2,
}

impl TwoColor {
    pub fn index(self) -> u8 {
        self as u8
    }

    pub fn from_index(i: u8) -> Result<Self> {
        match i {
            1 => Ok(TwoColor::One),
            2 => Ok(TwoColor::Two),
            _ => Err(Error::InvalidTwoComposition(format!("color index {i}"))),
        }
    }
}

/// A composition with parts from a restricted family, each part colored 1
/// or 2, the first part colored 1.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct TwoComposition {
    restriction: RestrictedFamily,
    items: Vec<(usize, TwoColor)>,
}

impl TwoComposition {
    pub fn new(restriction: RestrictedFamily, items: Vec<(usize, TwoColor)>) -> Result<Self> {
        if items.is_empty() {
            return Err(Error::EmptyComposition);
        }
        if items[0].1 != TwoColor::One {
            return Err(Error::InvalidTwoComposition(
                "first part must have color 1".into(),
            ));
        }
        for &(part, _) in &items {
            if !restriction.allows(part) {
                return Err(Error::PartOutsideFamily {
                    part,
                    family: restriction,
                });
            }
        }
        Ok(TwoComposition { restriction, items })
    }

    pub fn restriction(&self) -> RestrictedFamily {
        self.restriction
    }

    pub fn items(&self) -> &[(usize, TwoColor)] {
        &self.items
    }

    pub fn n(&self) -> usize {
        self.items.iter().map(|(p, _)| p).sum()
    }

    /// Serializes as a bare array of `[part, colorIndex]` pairs.
    pub fn to_pairs(&self) -> Vec<(usize, u8)> {
        self.items.iter().map(|&(p, c)| (p, c.index())).collect()
    }

    pub fn from_pairs(restriction: RestrictedFamily, pairs: Vec<(usize, u8)>) -> Result<Self> {
        let items = pairs
            .into_iter()
            .map(|(p, c)| Ok((p, TwoColor::from_index(c)?)))
            .collect::<Result<_>>()?;
        TwoComposition::new(restriction, items)
    }
}

impl Serialize for TwoComposition {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        self.to_pairs().serialize(serializer)
    }
}

impl fmt::Display for TwoComposition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, (p, c)) in self.items.iter().enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            write!(f, "{p}_{}", c.index())?;
        }
        Ok(())
    }
}

/// The scheme whose colored compositions pair with 2-compositions over the
/// given restriction.
pub fn paired_scheme(restriction: RestrictedFamily) -> ColorScheme {
    match restriction {
        RestrictedFamily::OneTwo => ColorScheme::FibPlus1,
        RestrictedFamily::Odd => ColorScheme::Fib,
        RestrictedFamily::GreaterThanOne => ColorScheme::FibMinus1,
    }
}

/// Flattens a colored composition into its 2-composition: one item per
/// tile, colored by the tile's left boundary.
pub fn colored_to_2comp(
    cc: &ColoredComposition,
    restriction: RestrictedFamily,
) -> Result<TwoComposition> {
    let expected = paired_scheme(restriction);
    if cc.scheme() != expected {
        return Err(Error::SchemeMismatch {
            expected,
            got: cc.scheme(),
        });
    }
    let mut items = Vec::new();
    for (_, color) in cc.items() {
        let Color::Secondary(sec) = color else {
            unreachable!("secondary schemes only")
        };
        for (i, &tile) in sec.parts().iter().enumerate() {
            let color = if i == 0 { TwoColor::One } else { TwoColor::Two };
            items.push((tile, color));
        }
    }
    TwoComposition::new(restriction, items)
}

/// Inverse of [`colored_to_2comp`]: a color-1 tile opens a new part, a
/// color-2 tile extends the current part's secondary tiling.
pub fn colored_from_2comp(tc: &TwoComposition) -> Result<ColoredComposition> {
    let scheme = paired_scheme(tc.restriction());
    let mut items: Vec<(usize, Color)> = Vec::new();
    let mut group: Vec<usize> = Vec::new();
    for &(tile, color) in tc.items() {
        if color == TwoColor::One && !group.is_empty() {
            items.push(close_group(&mut group)?);
        }
        group.push(tile);
    }
    items.push(close_group(&mut group)?);
    ColoredComposition::new(scheme, items)
}

fn close_group(group: &mut Vec<usize>) -> Result<(usize, Color)> {
    let sec = Composition::new(std::mem::take(group))?;
    Ok((sec.total(), Color::Secondary(sec)))
}

/// All 2-compositions of `n` over the restriction, ordered by part
/// sequence then color word.
pub fn enumerate_2comp(restriction: RestrictedFamily, n: usize) -> Vec<TwoComposition> {
    let mut out = Vec::new();
    for parts in compositions_with(n, |p| restriction.allows(p)) {
        let free = parts.len() - 1;
        for mask in 0u64..(1 << free) {
            let items = parts
                .iter()
                .enumerate()
                .map(|(i, &p)| {
                    let color = if i == 0 || mask & (1 << (free - i)) == 0 {
                        TwoColor::One
                    } else {
                        TwoColor::Two
                    };
                    (p, color)
                })
                .collect();
            out.push(TwoComposition {
                restriction,
                items,
            });
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::colorings::{count_colored, enumerate_colored};
    use num_bigint::BigUint;
    use std::collections::HashSet;

    fn cc(scheme: ColorScheme, parts_and_secs: &[(usize, &[usize])]) -> ColoredComposition {
        ColoredComposition::new(
            scheme,
            parts_and_secs
                .iter()
                .map(|&(p, sec)| (p, Color::Secondary(Composition::new(sec.to_vec()).unwrap())))
                .collect(),
        )
        .unwrap()
    }

    #[test]
    fn first_part_color_forced() {
        assert!(TwoComposition::new(
            RestrictedFamily::OneTwo,
            vec![(1, TwoColor::Two)]
        )
        .is_err());
        assert!(TwoComposition::new(RestrictedFamily::Odd, vec![(2, TwoColor::One)]).is_err());
    }

    #[test]
    fn eight_panels_of_three() {
        let panels: Vec<(ColoredComposition, Vec<(usize, u8)>)> = vec![
            (
                cc(ColorScheme::FibPlus1, &[(1, &[1]), (1, &[1]), (1, &[1])]),
                vec![(1, 1), (1, 1), (1, 1)],
            ),
            (
                cc(ColorScheme::FibPlus1, &[(1, &[1]), (2, &[2])]),
                vec![(1, 1), (2, 1)],
            ),
            (
                cc(ColorScheme::FibPlus1, &[(1, &[1]), (2, &[1, 1])]),
                vec![(1, 1), (1, 1), (1, 2)],
            ),
            (
                cc(ColorScheme::FibPlus1, &[(2, &[2]), (1, &[1])]),
                vec![(2, 1), (1, 1)],
            ),
            (
                cc(ColorScheme::FibPlus1, &[(2, &[1, 1]), (1, &[1])]),
                vec![(1, 1), (1, 2), (1, 1)],
            ),
            (
                cc(ColorScheme::FibPlus1, &[(3, &[1, 2])]),
                vec![(1, 1), (2, 2)],
            ),
            (
                cc(ColorScheme::FibPlus1, &[(3, &[2, 1])]),
                vec![(2, 1), (1, 2)],
            ),
            (
                cc(ColorScheme::FibPlus1, &[(3, &[1, 1, 1])]),
                vec![(1, 1), (1, 2), (1, 2)],
            ),
        ];
        for (colored, pairs) in panels {
            let tc = colored_to_2comp(&colored, RestrictedFamily::OneTwo).unwrap();
            assert_eq!(tc.to_pairs(), pairs);
            assert_eq!(colored_from_2comp(&tc).unwrap(), colored);
        }
    }

    #[test]
    fn single_cell() {
        let one = cc(ColorScheme::FibPlus1, &[(1, &[1])]);
        let tc = colored_to_2comp(&one, RestrictedFamily::OneTwo).unwrap();
        assert_eq!(tc.to_pairs(), vec![(1, 1)]);
    }

    #[test]
    fn enumeration_counts() {
        assert_eq!(enumerate_2comp(RestrictedFamily::OneTwo, 3).len(), 8);
        assert_eq!(enumerate_2comp(RestrictedFamily::GreaterThanOne, 2).len(), 1);
        for n in 1..=10 {
            for restriction in RestrictedFamily::ALL {
                let count = enumerate_2comp(restriction, n).len();
                assert_eq!(
                    BigUint::from(count),
                    count_colored(paired_scheme(restriction), n),
                    "{restriction} n={n}"
                );
            }
        }
    }

    #[test]
    fn bijection_exhaustive() {
        for restriction in RestrictedFamily::ALL {
            let scheme = paired_scheme(restriction);
            for n in 1..=10 {
                let all = enumerate_2comp(restriction, n);
                let mut images = HashSet::new();
                for colored in enumerate_colored(scheme, n) {
                    let tc = colored_to_2comp(&colored, restriction).unwrap();
                    assert_eq!(tc.n(), n);
                    assert_eq!(colored_from_2comp(&tc).unwrap(), colored);
                    assert!(images.insert(tc));
                }
                assert_eq!(images.len(), all.len(), "{restriction} n={n}");
                assert!(all.iter().all(|tc| images.contains(tc)));
            }
        }
    }

    #[test]
    fn scheme_mismatch_rejected() {
        let colored = cc(ColorScheme::FibPlus1, &[(2, &[2])]);
        assert!(matches!(
            colored_to_2comp(&colored, RestrictedFamily::Odd),
            Err(Error::SchemeMismatch { .. })
        ));
    }
}

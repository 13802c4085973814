//! Restricted ternary and quaternary words, and the word-level codecs of
//! the colored composition families.
//!
//! Walking a colored board left to right across its `n-1` internal
//! positions and recording the separator kind yields a word of length
//! `n-1`: ternary (`2` solid, `1` dotted, `0` none) for the three
//! secondary-tiling schemes, quaternary (`3` solid, `2` dotted, `1` step
//! left of the tile's spot, `0` step right of it) for the spotted scheme.
//! Each scheme lands exactly on one forbidden-factor language, and the walk
//! is invertible.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::colorings::{from_board, to_board, ColorScheme, ColoredComposition};
use crate::comp::{Board, Composition, SeparatorKind};
use crate::error::{Error, Result};
use crate::util::DisjointSet;

/// A word over `{0,1,2}` or `{0,1,2,3}`. The empty word is allowed.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(try_from = "WordRepr", into = "WordRepr")]
pub struct Word {
    letters: Vec<u8>,
    alphabet: u8,
}

impl Word {
    pub fn new(letters: Vec<u8>, alphabet: u8) -> Result<Self> {
        if alphabet != 3 && alphabet != 4 {
            return Err(Error::InvalidBoard(format!("unsupported alphabet size {alphabet}")));
        }
        if let Some((index, &letter)) = letters.iter().enumerate().find(|(_, &l)| l >= alphabet) {
            return Err(Error::LetterOutOfRange {
                letter,
                index,
                alphabet,
            });
        }
        Ok(Word { letters, alphabet })
    }

    pub fn ternary(letters: Vec<u8>) -> Result<Self> {
        Word::new(letters, 3)
    }

    pub fn quaternary(letters: Vec<u8>) -> Result<Self> {
        Word::new(letters, 4)
    }

    /// Parses a digit string such as `"021102201"`.
    pub fn parse(s: &str, alphabet: u8) -> Result<Self> {
        let letters = s
            .chars()
            .enumerate()
            .map(|(index, c)| {
                c.to_digit(10).map(|d| d as u8).ok_or(Error::LetterOutOfRange {
                    letter: u8::MAX,
                    index,
                    alphabet,
                })
            })
            .collect::<Result<_>>()?;
        Word::new(letters, alphabet)
    }

    pub fn letters(&self) -> &[u8] {
        &self.letters
    }

    pub fn alphabet(&self) -> u8 {
        self.alphabet
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for &l in &self.letters {
            write!(f, "{l}")?;
        }
        Ok(())
    }
}

#[derive(Serialize, Deserialize)]
struct WordRepr {
    word: String,
    alphabet: u8,
}

impl TryFrom<WordRepr> for Word {
    type Error = Error;
    fn try_from(r: WordRepr) -> Result<Self> {
        Word::parse(&r.word, r.alphabet)
    }
}

impl From<Word> for WordRepr {
    fn from(w: Word) -> Self {
        WordRepr {
            alphabet: w.alphabet,
            word: w.to_string(),
        }
    }
}

/// Forbidden-factor constraints on words.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum WordConstraint {
    /// Ternary, no `00` factor.
    NoAdjacentZeros,
    /// Ternary, every maximal run of `0`s has even length.
    ZeroRunsEven,
    /// Ternary, every maximal run of `1`s and of `2`s has even length.
    OddRunsForbidden12,
    /// Ternary, no two adjacent nonzero letters.
    NoAdjacentNonzero,
    /// Quaternary, no `01` factor.
    Avoids01,
}

impl WordConstraint {
    pub const ALL: [WordConstraint; 5] = [
        WordConstraint::NoAdjacentZeros,
        WordConstraint::ZeroRunsEven,
        WordConstraint::OddRunsForbidden12,
        WordConstraint::NoAdjacentNonzero,
        WordConstraint::Avoids01,
    ];

    pub fn alphabet(self) -> u8 {
        match self {
            WordConstraint::Avoids01 => 4,
            _ => 3,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            WordConstraint::NoAdjacentZeros => "no-adjacent-zeros",
            WordConstraint::ZeroRunsEven => "zero-runs-even",
            WordConstraint::OddRunsForbidden12 => "odd-runs-forbidden-12",
            WordConstraint::NoAdjacentNonzero => "no-adjacent-nonzero",
            WordConstraint::Avoids01 => "avoids-01",
        }
    }

    pub fn parse(s: &str) -> Option<Self> {
        WordConstraint::ALL.into_iter().find(|c| c.name() == s)
    }
}

impl fmt::Display for WordConstraint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Does the word satisfy the constraint? Errors on alphabet mismatch.
pub fn check_word(w: &Word, c: WordConstraint) -> Result<bool> {
    Ok(violation(w, c)?.is_none())
}

/// Index of the first letter at which the word is known to violate the
/// constraint, if any. For run-parity constraints this is the index just
/// past the offending run.
pub fn violation(w: &Word, c: WordConstraint) -> Result<Option<usize>> {
    if w.alphabet() != c.alphabet() {
        return Err(Error::AlphabetMismatch {
            constraint: c,
            expected: c.alphabet(),
            got: w.alphabet(),
        });
    }
    let ls = w.letters();
    let hit = match c {
        WordConstraint::NoAdjacentZeros => (1..ls.len()).find(|&i| ls[i - 1] == 0 && ls[i] == 0),
        WordConstraint::Avoids01 => (1..ls.len()).find(|&i| ls[i - 1] == 0 && ls[i] == 1),
        WordConstraint::NoAdjacentNonzero => {
            (1..ls.len()).find(|&i| ls[i - 1] != 0 && ls[i] != 0)
        }
        WordConstraint::ZeroRunsEven => odd_run_end(ls, |l| l == 0),
        WordConstraint::OddRunsForbidden12 => {
            let one = odd_run_end(ls, |l| l == 1);
            let two = odd_run_end(ls, |l| l == 2);
            match (one, two) {
                (Some(a), Some(b)) => Some(a.min(b)),
                (a, b) => a.or(b),
            }
        }
    };
    Ok(hit)
}

/// Index just past the first odd-length maximal run of letters matching
/// `pred` (the run's closing boundary, or `len - 1` for a trailing run).
fn odd_run_end(ls: &[u8], pred: impl Fn(u8) -> bool) -> Option<usize> {
    let mut run = 0usize;
    for (i, &l) in ls.iter().enumerate() {
        if pred(l) {
            run += 1;
        } else {
            if run % 2 == 1 {
                return Some(i);
            }
            run = 0;
        }
    }
    if run % 2 == 1 {
        Some(ls.len() - 1)
    } else {
        None
    }
}

/// Could some suffix extend this prefix into a valid word? Run parities are
/// only charged once a run has closed.
fn viable_prefix(ls: &[u8], c: WordConstraint) -> bool {
    match c {
        WordConstraint::NoAdjacentZeros => {
            !(ls.len() >= 2 && ls[ls.len() - 2] == 0 && ls[ls.len() - 1] == 0)
        }
        WordConstraint::Avoids01 => {
            !(ls.len() >= 2 && ls[ls.len() - 2] == 0 && ls[ls.len() - 1] == 1)
        }
        WordConstraint::NoAdjacentNonzero => {
            !(ls.len() >= 2 && ls[ls.len() - 2] != 0 && ls[ls.len() - 1] != 0)
        }
        WordConstraint::ZeroRunsEven => closed_runs_even(ls, |l| l == 0),
        WordConstraint::OddRunsForbidden12 => {
            closed_runs_even(ls, |l| l == 1) && closed_runs_even(ls, |l| l == 2)
        }
    }
}

fn closed_runs_even(ls: &[u8], pred: impl Fn(u8) -> bool) -> bool {
    // Only the run closed by the last letter can newly fail; checking the
    // whole prefix keeps this obviously correct and it is still cheap.
    let mut run = 0usize;
    for &l in ls {
        if pred(l) {
            run += 1;
        } else {
            if run % 2 == 1 {
                return false;
            }
            run = 0;
        }
    }
    true
}

/// All words of the given length satisfying the constraint, lexicographic.
pub fn enumerate_words(c: WordConstraint, len: usize) -> WordIter {
    WordIter {
        constraint: c,
        len,
        alphabet: c.alphabet(),
        prefix: Vec::new(),
        started: false,
        done: false,
    }
}

/// Depth-first lexicographic enumeration with prefix pruning.
pub struct WordIter {
    constraint: WordConstraint,
    len: usize,
    alphabet: u8,
    prefix: Vec<u8>,
    started: bool,
    done: bool,
}

impl WordIter {
    /// Backtracks to the next viable prefix in DFS order.
    fn advance(&mut self) -> bool {
        while let Some(l) = self.prefix.pop() {
            for next in l + 1..self.alphabet {
                self.prefix.push(next);
                if viable_prefix(&self.prefix, self.constraint) {
                    return true;
                }
                self.prefix.pop();
            }
        }
        false
    }

    /// Extends the prefix to full length with smallest viable letters.
    fn descend(&mut self) -> bool {
        while self.prefix.len() < self.len {
            let mut extended = false;
            for l in 0..self.alphabet {
                self.prefix.push(l);
                if viable_prefix(&self.prefix, self.constraint) {
                    extended = true;
                    break;
                }
                self.prefix.pop();
            }
            if !extended {
                return false;
            }
        }
        true
    }
}

impl Iterator for WordIter {
    type Item = Word;

    fn next(&mut self) -> Option<Word> {
        if self.done {
            return None;
        }
        loop {
            if self.started {
                if !self.advance() {
                    self.done = true;
                    return None;
                }
            } else {
                self.started = true;
            }
            if self.descend() {
                let w = Word {
                    letters: self.prefix.clone(),
                    alphabet: self.alphabet,
                };
                // a viable prefix can still end on an open odd run
                if check_word(&w, self.constraint).unwrap() {
                    return Some(w);
                }
            }
        }
    }
}

/// The word constraint characterizing each scheme's codec image.
pub fn scheme_constraint(scheme: ColorScheme) -> Result<WordConstraint> {
    match scheme {
        ColorScheme::FibPlus1 => Ok(WordConstraint::NoAdjacentZeros),
        ColorScheme::Fib => Ok(WordConstraint::ZeroRunsEven),
        ColorScheme::FibMinus1 => Ok(WordConstraint::NoAdjacentNonzero),
        ColorScheme::FibEven => Ok(WordConstraint::Avoids01),
        ColorScheme::FibOdd => Err(Error::NoWordCodec(ColorScheme::FibOdd)),
    }
}

/// Reads the word of length `n-1` off the colored board.
pub fn colored_to_word(cc: &ColoredComposition) -> Result<Word> {
    scheme_constraint(cc.scheme())?;
    let board = to_board(cc);
    let n = board.n();
    let quaternary = cc.scheme() == ColorScheme::FibEven;
    let mut letters = Vec::with_capacity(n - 1);
    if quaternary {
        // spot position of the tile covering each cell
        let mut spot_of = vec![0usize; n + 1];
        for (a, b) in tiles_of(&board) {
            let spot = *board.spots().range(a..=b).next().expect("one spot per tile");
            for c in a..=b {
                spot_of[c] = spot;
            }
        }
        for p in 1..n {
            letters.push(match board.separator_at(p) {
                Some(SeparatorKind::Solid) => 3,
                Some(SeparatorKind::Dotted) => 2,
                None => {
                    if p < spot_of[p] {
                        1
                    } else {
                        0
                    }
                }
            });
        }
        Word::quaternary(letters)
    } else {
        for p in 1..n {
            letters.push(match board.separator_at(p) {
                Some(SeparatorKind::Solid) => 2,
                Some(SeparatorKind::Dotted) => 1,
                None => 0,
            });
        }
        Word::ternary(letters)
    }
}

/// All tiles of a board: maximal cell runs not split by any separator.
fn tiles_of(board: &Board) -> Vec<(usize, usize)> {
    let mut tiles = Vec::new();
    let mut start = 1;
    for p in 1..board.n() {
        if board.separator_at(p).is_some() {
            tiles.push((start, p));
            start = p + 1;
        }
    }
    tiles.push((start, board.n()));
    tiles
}

/// Inverse of [`colored_to_word`]: rebuilds the colored composition of
/// `len + 1` from a word satisfying the scheme's constraint.
pub fn word_to_colored(w: &Word, scheme: ColorScheme) -> Result<ColoredComposition> {
    let constraint = scheme_constraint(scheme)?;
    if let Some(index) = violation(w, constraint)? {
        return Err(Error::ConstraintViolation { constraint, index });
    }
    let n = w.len() + 1;
    let mut separators = std::collections::BTreeMap::new();
    let mut spots = std::collections::BTreeSet::new();
    if scheme == ColorScheme::FibEven {
        for (i, &l) in w.letters().iter().enumerate() {
            match l {
                3 => {
                    separators.insert(i + 1, SeparatorKind::Solid);
                }
                2 => {
                    separators.insert(i + 1, SeparatorKind::Dotted);
                }
                _ => {}
            }
        }
        // Within a tile the letters read 1...10...0; the spot sits right
        // after the last 1.
        let board = Board::new(n, separators.clone(), Default::default(), Default::default())?;
        for (a, b) in tiles_of(&board) {
            let ones = (a..b)
                .take_while(|&p| w.letters()[p - 1] == 1)
                .count();
            spots.insert(a + ones);
        }
    } else {
        for (i, &l) in w.letters().iter().enumerate() {
            match l {
                2 => {
                    separators.insert(i + 1, SeparatorKind::Solid);
                }
                1 => {
                    separators.insert(i + 1, SeparatorKind::Dotted);
                }
                _ => {}
            }
        }
    }
    let board = Board::new(n, separators, spots, Default::default())?;
    from_board(&board, scheme)
}

// --- maps specific to the FibMinus1 (Jacobsthal-counted) family -------------

/// Bundles the `n-1` internal positions of a FibMinus1 colored board into a
/// composition of `n-1` ending with an odd part.
///
/// Every internal position carries a plain subdivision line; a dotted
/// separator glues its line to the one on its left, a solid separator to
/// both neighbors. Bundle sizes, left to right, are the image parts.
pub fn jacobsthal_comp_a(cc: &ColoredComposition) -> Result<Composition> {
    expect_scheme(cc, ColorScheme::FibMinus1)?;
    let board = to_board(cc);
    let n = board.n();
    let mut ds = DisjointSet::new(n - 1);
    for (&p, &kind) in board.separators() {
        match kind {
            SeparatorKind::Dotted => ds.union(p - 1, p - 2),
            SeparatorKind::Solid => {
                ds.union(p - 1, p - 2);
                ds.union(p - 1, p);
            }
        }
    }
    let parts: Vec<usize> = ds.groups().into_iter().map(|g| g.len()).collect();
    Composition::new(parts)
}

/// Inverse of [`jacobsthal_comp_a`].
pub fn jacobsthal_comp_a_inv(c: &Composition) -> Result<ColoredComposition> {
    if c.last_part() % 2 == 0 {
        return Err(Error::BadLastPart {
            expected: "odd",
            found: c.last_part(),
        });
    }
    let n = c.total() + 1;
    let mut separators = std::collections::BTreeMap::new();
    let mut start = 1; // position of the bundle's first line
    for &p in c.parts() {
        // within the bundle, even positions become separators; in an even
        // bundle the last one is dotted instead of solid
        for q in (2..=p).step_by(2) {
            let kind = if p % 2 == 0 && q == p {
                SeparatorKind::Dotted
            } else {
                SeparatorKind::Solid
            };
            separators.insert(start + q - 1, kind);
        }
        start += p;
    }
    let board = Board::new(n, separators, Default::default(), Default::default())?;
    from_board(&board, ColorScheme::FibMinus1)
}

/// Adds 1 to the last (odd) part, landing on compositions ending even.
pub fn jacobsthal_comp_b(c: &Composition) -> Result<Composition> {
    if c.last_part() % 2 == 0 {
        return Err(Error::BadLastPart {
            expected: "odd",
            found: c.last_part(),
        });
    }
    let mut parts = c.parts().to_vec();
    *parts.last_mut().unwrap() += 1;
    Composition::new(parts)
}

/// Inverse of [`jacobsthal_comp_b`].
pub fn jacobsthal_comp_b_inv(c: &Composition) -> Result<Composition> {
    if c.last_part() % 2 == 1 {
        return Err(Error::BadLastPart {
            expected: "even",
            found: c.last_part(),
        });
    }
    let mut parts = c.parts().to_vec();
    *parts.last_mut().unwrap() -= 1;
    if *parts.last().unwrap() == 0 {
        return Err(Error::ZeroPart);
    }
    Composition::new(parts)
}

/// Writes a `2` on the cells flanking each solid separator and a `1` on the
/// cells flanking each dotted one, then reads cells `2..=n-1` with `0` for
/// blanks: a ternary word of length `n-2` whose runs of `1`s and `2`s all
/// have even length.
pub fn jacobsthal_word_c(cc: &ColoredComposition) -> Result<Word> {
    expect_scheme(cc, ColorScheme::FibMinus1)?;
    let board = to_board(cc);
    let n = board.n();
    let mut cells = vec![0u8; n + 1];
    for (&p, &kind) in board.separators() {
        let mark = if kind == SeparatorKind::Solid { 2 } else { 1 };
        cells[p] = mark;
        cells[p + 1] = mark;
    }
    Word::ternary(cells[2..n].to_vec())
}

/// Inverse of [`jacobsthal_word_c`]: equal adjacent letters are paired
/// strictly left to right, and each pair becomes a separator between its
/// two cells (`11` dotted, `22` solid).
pub fn jacobsthal_word_c_inv(w: &Word) -> Result<ColoredComposition> {
    if let Some(index) = violation(w, WordConstraint::OddRunsForbidden12)? {
        return Err(Error::ConstraintViolation {
            constraint: WordConstraint::OddRunsForbidden12,
            index,
        });
    }
    let n = w.len() + 2;
    let mut separators = std::collections::BTreeMap::new();
    let mut i = 0;
    while i < w.len() {
        let l = w.letters()[i];
        if l == 0 {
            i += 1;
            continue;
        }
        // letters sit on cells i+2 and i+3; the separator goes between them
        let kind = if l == 2 { SeparatorKind::Solid } else { SeparatorKind::Dotted };
        separators.insert(i + 2, kind);
        i += 2;
    }
    let board = Board::new(n, separators, Default::default(), Default::default())?;
    from_board(&board, ColorScheme::FibMinus1)
}

/// The position-walk word of a FibMinus1 board always starts and ends with
/// `0`; stripping those gives a word of length `n-3` with no adjacent
/// nonzero letters. Needs `n > 2`.
pub fn jacobsthal_word_d(cc: &ColoredComposition) -> Result<Word> {
    expect_scheme(cc, ColorScheme::FibMinus1)?;
    let n = cc.n();
    if n <= 2 {
        return Err(Error::TooSmall { n, min: 3 });
    }
    let full = colored_to_word(cc)?;
    debug_assert_eq!(full.letters().first(), Some(&0));
    debug_assert_eq!(full.letters().last(), Some(&0));
    Word::ternary(full.letters()[1..full.len() - 1].to_vec())
}

/// Inverse of [`jacobsthal_word_d`].
pub fn jacobsthal_word_d_inv(w: &Word) -> Result<ColoredComposition> {
    let mut letters = Vec::with_capacity(w.len() + 2);
    letters.push(0);
    letters.extend_from_slice(w.letters());
    letters.push(0);
    word_to_colored(&Word::ternary(letters)?, ColorScheme::FibMinus1)
}

fn expect_scheme(cc: &ColoredComposition, expected: ColorScheme) -> Result<()> {
    if cc.scheme() != expected {
        return Err(Error::SchemeMismatch {
            expected,
            got: cc.scheme(),
        });
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::colorings::{enumerate_colored, Color};
    use std::collections::HashSet;

    fn w3(s: &str) -> Word {
        Word::parse(s, 3).unwrap()
    }

    fn w4(s: &str) -> Word {
        Word::parse(s, 4).unwrap()
    }

    #[test]
    fn check_word_examples() {
        assert!(check_word(&w3("021102201"), WordConstraint::NoAdjacentZeros).unwrap());
        assert!(check_word(&w3("10021200112"), WordConstraint::ZeroRunsEven).unwrap());
        assert!(!check_word(&w3("00"), WordConstraint::NoAdjacentZeros).unwrap());
        assert!(check_word(&w4("233100230"), WordConstraint::Avoids01).unwrap());
        assert!(!check_word(&w4("2301"), WordConstraint::Avoids01).unwrap());
        assert!(check_word(&w3("111122220112211"), WordConstraint::OddRunsForbidden12).unwrap());
        assert!(!check_word(&w3("121"), WordConstraint::NoAdjacentNonzero).unwrap());
        assert!(matches!(
            check_word(&w3("0"), WordConstraint::Avoids01),
            Err(Error::AlphabetMismatch { .. })
        ));
    }

    #[test]
    fn enumerate_word_counts() {
        assert_eq!(enumerate_words(WordConstraint::NoAdjacentZeros, 2).count(), 8);
        assert_eq!(enumerate_words(WordConstraint::Avoids01, 1).count(), 4);
        assert_eq!(enumerate_words(WordConstraint::ZeroRunsEven, 0).count(), 1);
        // oracle: filter the full cube
        for len in 0..=7 {
            for c in WordConstraint::ALL {
                let base = c.alphabet() as usize;
                let total = base.pow(len as u32);
                let mut brute = 0;
                for mut x in 0..total {
                    let mut letters = Vec::with_capacity(len);
                    for _ in 0..len {
                        letters.push((x % base) as u8);
                        x /= base;
                    }
                    letters.reverse();
                    if check_word(&Word::new(letters, c.alphabet()).unwrap(), c).unwrap() {
                        brute += 1;
                    }
                }
                let listed: Vec<Word> = enumerate_words(c, len).collect();
                assert_eq!(listed.len(), brute, "{c} len={len}");
                let mut sorted = listed.clone();
                sorted.sort();
                sorted.dedup();
                assert_eq!(sorted, listed, "{c} len={len} order");
            }
        }
    }

    #[test]
    fn codec_worked_examples() {
        let cc = ColoredComposition::new(
            ColorScheme::FibPlus1,
            vec![
                (2, Color::Secondary(Composition::new(vec![2]).unwrap())),
                (4, Color::Secondary(Composition::new(vec![1, 1, 2]).unwrap())),
                (1, Color::Secondary(Composition::new(vec![1]).unwrap())),
                (3, Color::Secondary(Composition::new(vec![2, 1]).unwrap())),
            ],
        )
        .unwrap();
        let word = colored_to_word(&cc).unwrap();
        assert_eq!(word.to_string(), "021102201");
        assert_eq!(word_to_colored(&word, ColorScheme::FibPlus1).unwrap(), cc);

        let cc = ColoredComposition::new(
            ColorScheme::Fib,
            vec![
                (4, Color::Secondary(Composition::new(vec![1, 3]).unwrap())),
                (2, Color::Secondary(Composition::new(vec![1, 1]).unwrap())),
                (5, Color::Secondary(Composition::new(vec![3, 1, 1]).unwrap())),
                (1, Color::Secondary(Composition::new(vec![1]).unwrap())),
            ],
        )
        .unwrap();
        assert_eq!(colored_to_word(&cc).unwrap().to_string(), "10021200112");

        let empty = Word::ternary(vec![]).unwrap();
        let cc1 = word_to_colored(&empty, ColorScheme::FibPlus1).unwrap();
        assert_eq!(cc1.n(), 1);
    }

    #[test]
    fn spotted_codec_example() {
        use crate::colorings::SpottedTile;
        let cc = ColoredComposition::new(
            ColorScheme::FibEven,
            vec![
                (
                    2,
                    Color::Spotted(vec![
                        SpottedTile { len: 1, spot: 1 },
                        SpottedTile { len: 1, spot: 1 },
                    ]),
                ),
                (1, Color::Spotted(vec![SpottedTile { len: 1, spot: 1 }])),
                (
                    5,
                    Color::Spotted(vec![
                        SpottedTile { len: 4, spot: 2 },
                        SpottedTile { len: 1, spot: 1 },
                    ]),
                ),
                (2, Color::Spotted(vec![SpottedTile { len: 2, spot: 1 }])),
            ],
        )
        .unwrap();
        let word = colored_to_word(&cc).unwrap();
        assert_eq!(word.to_string(), "233100230");
        assert_eq!(word_to_colored(&word, ColorScheme::FibEven).unwrap(), cc);
    }

    #[test]
    fn codec_bijections_exhaustive() {
        let pairs = [
            (ColorScheme::FibPlus1, WordConstraint::NoAdjacentZeros),
            (ColorScheme::Fib, WordConstraint::ZeroRunsEven),
            (ColorScheme::FibEven, WordConstraint::Avoids01),
        ];
        for (scheme, constraint) in pairs {
            for n in 1..=9 {
                let mut images = HashSet::new();
                let mut count = 0usize;
                for cc in enumerate_colored(scheme, n) {
                    let word = colored_to_word(&cc).unwrap();
                    assert_eq!(word.len(), n - 1);
                    assert!(check_word(&word, constraint).unwrap());
                    assert_eq!(word_to_colored(&word, scheme).unwrap(), cc);
                    assert!(images.insert(word), "duplicate image");
                    count += 1;
                }
                assert_eq!(count, enumerate_words(constraint, n - 1).count(), "{scheme} n={n}");
            }
        }
    }

    #[test]
    fn word_to_colored_reports_first_violation() {
        let err = word_to_colored(&w3("0100"), ColorScheme::FibPlus1).unwrap_err();
        assert_eq!(
            err,
            Error::ConstraintViolation {
                constraint: WordConstraint::NoAdjacentZeros,
                index: 3
            }
        );
    }

    #[test]
    fn jacobsthal_a_worked_example() {
        let cc = ColoredComposition::new(
            ColorScheme::FibMinus1,
            vec![
                (6, Color::Secondary(Composition::new(vec![2, 2, 2]).unwrap())),
                (2, Color::Secondary(Composition::new(vec![2]).unwrap())),
                (5, Color::Secondary(Composition::new(vec![3, 2]).unwrap())),
                (4, Color::Secondary(Composition::new(vec![2, 2]).unwrap())),
            ],
        )
        .unwrap();
        let img = jacobsthal_comp_a(&cc).unwrap();
        assert_eq!(img.parts(), &[2, 2, 5, 2, 4, 1]);
        assert_eq!(jacobsthal_comp_a_inv(&img).unwrap(), cc);

        // inverse worked example
        let c = Composition::new(vec![4, 2, 3, 1, 1, 5]).unwrap();
        let cc = jacobsthal_comp_a_inv(&c).unwrap();
        assert_eq!(cc.composition().parts(), &[2, 6, 5, 2, 2]);
        assert_eq!(
            cc.items()[1].1,
            Color::Secondary(Composition::new(vec![2, 2, 2]).unwrap())
        );
        assert_eq!(
            cc.items()[2].1,
            Color::Secondary(Composition::new(vec![5]).unwrap())
        );
        assert_eq!(jacobsthal_comp_a(&cc).unwrap(), c);

        // smallest instance
        let two = ColoredComposition::new(
            ColorScheme::FibMinus1,
            vec![(2, Color::Secondary(Composition::new(vec![2]).unwrap()))],
        )
        .unwrap();
        assert_eq!(jacobsthal_comp_a(&two).unwrap().parts(), &[1]);
    }

    #[test]
    fn jacobsthal_b() {
        let c = Composition::new(vec![2, 2, 5, 2, 4, 1]).unwrap();
        assert_eq!(jacobsthal_comp_b(&c).unwrap().parts(), &[2, 2, 5, 2, 4, 2]);
        assert_eq!(
            jacobsthal_comp_b(&Composition::new(vec![1]).unwrap())
                .unwrap()
                .parts(),
            &[2]
        );
        assert!(jacobsthal_comp_b(&Composition::new(vec![2]).unwrap()).is_err());
        assert!(jacobsthal_comp_b_inv(&Composition::new(vec![1]).unwrap()).is_err());
    }

    #[test]
    fn jacobsthal_word_c_worked_example() {
        let cc = ColoredComposition::new(
            ColorScheme::FibMinus1,
            vec![
                (6, Color::Secondary(Composition::new(vec![2, 2, 2]).unwrap())),
                (2, Color::Secondary(Composition::new(vec![2]).unwrap())),
                (5, Color::Secondary(Composition::new(vec![3, 2]).unwrap())),
                (4, Color::Secondary(Composition::new(vec![2, 2]).unwrap())),
            ],
        )
        .unwrap();
        let word = jacobsthal_word_c(&cc).unwrap();
        assert_eq!(word.to_string(), "111122220112211");
        assert_eq!(word.len(), 15);
        assert_eq!(jacobsthal_word_c_inv(&word).unwrap(), cc);

        // n = 2 gives the empty word
        let two = ColoredComposition::new(
            ColorScheme::FibMinus1,
            vec![(2, Color::Secondary(Composition::new(vec![2]).unwrap()))],
        )
        .unwrap();
        assert!(jacobsthal_word_c(&two).unwrap().is_empty());
        assert_eq!(
            jacobsthal_word_c_inv(&Word::ternary(vec![]).unwrap()).unwrap(),
            two
        );
    }

    #[test]
    fn jacobsthal_word_d_small() {
        let three = ColoredComposition::new(
            ColorScheme::FibMinus1,
            vec![(3, Color::Secondary(Composition::new(vec![3]).unwrap()))],
        )
        .unwrap();
        let word = jacobsthal_word_d(&three).unwrap();
        assert!(word.is_empty());
        assert_eq!(jacobsthal_word_d_inv(&word).unwrap(), three);

        let two = ColoredComposition::new(
            ColorScheme::FibMinus1,
            vec![(2, Color::Secondary(Composition::new(vec![2]).unwrap()))],
        )
        .unwrap();
        assert!(matches!(jacobsthal_word_d(&two), Err(Error::TooSmall { .. })));
    }

    #[test]
    fn fibminus1_words_start_and_end_with_zero() {
        for n in 2..=10 {
            for cc in enumerate_colored(ColorScheme::FibMinus1, n) {
                let word = colored_to_word(&cc).unwrap();
                assert_eq!(word.letters().first(), Some(&0));
                assert_eq!(word.letters().last(), Some(&0));
            }
        }
    }

    #[test]
    fn jacobsthal_bijections_exhaustive() {
        for n in 2..=11 {
            let colored: Vec<_> = enumerate_colored(ColorScheme::FibMinus1, n).collect();

            // (a) compositions of n-1 ending odd
            let mut images = HashSet::new();
            for cc in &colored {
                let img = jacobsthal_comp_a(cc).unwrap();
                assert_eq!(img.total(), n - 1);
                assert_eq!(img.last_part() % 2, 1);
                assert_eq!(&jacobsthal_comp_a_inv(&img).unwrap(), cc);
                assert!(images.insert(img));
            }
            let ending_odd = brute_force_ending(n - 1, 1);
            assert_eq!(images.len(), ending_odd.len());

            // (b) on to compositions of n ending even
            let mut b_images = HashSet::new();
            for c in &ending_odd {
                let img = jacobsthal_comp_b(c).unwrap();
                assert_eq!(img.total(), n);
                assert_eq!(jacobsthal_comp_b_inv(&img).unwrap(), *c);
                assert!(b_images.insert(img));
            }
            assert_eq!(b_images.len(), brute_force_ending(n, 0).len());

            // (c) paired-run words of length n-2
            let mut c_images = HashSet::new();
            for cc in &colored {
                let word = jacobsthal_word_c(cc).unwrap();
                assert_eq!(word.len(), n - 2);
                assert!(check_word(&word, WordConstraint::OddRunsForbidden12).unwrap());
                assert_eq!(&jacobsthal_word_c_inv(&word).unwrap(), cc);
                assert!(c_images.insert(word));
            }
            assert_eq!(
                c_images.len(),
                enumerate_words(WordConstraint::OddRunsForbidden12, n - 2).count()
            );

            // (d) sparse words of length n-3
            if n >= 3 {
                let mut d_images = HashSet::new();
                for cc in &colored {
                    let word = jacobsthal_word_d(cc).unwrap();
                    assert_eq!(word.len(), n - 3);
                    assert!(check_word(&word, WordConstraint::NoAdjacentNonzero).unwrap());
                    assert_eq!(&jacobsthal_word_d_inv(&word).unwrap(), cc);
                    assert!(d_images.insert(word));
                }
                assert_eq!(
                    d_images.len(),
                    enumerate_words(WordConstraint::NoAdjacentNonzero, n - 3).count()
                );
            }
        }
    }

    /// All compositions of n whose last part has the given parity, by the
    /// bitmask oracle.
    fn brute_force_ending(n: usize, parity: usize) -> Vec<Composition> {
        let mut out = Vec::new();
        for mask in 0u32..(1 << (n - 1)) {
            let mut parts = Vec::new();
            let mut run = 1;
            for b in 0..n - 1 {
                if mask & (1 << b) != 0 {
                    parts.push(run);
                    run = 1;
                } else {
                    run += 1;
                }
            }
            parts.push(run);
            if parts.last().unwrap() % 2 == parity {
                out.push(Composition::new(parts).unwrap());
            }
        }
        out
    }
}

//! Cross-check suite: every bijection is driven over exhaustively
//! enumerated domains and compared against an independently enumerated
//! codomain, and every count identity is recomputed two ways.
//!
//! Each check caps its range at `min(its own documented bound, max_n)`, so
//! `run_all(1)` is a smoke test and `run_all(12)` is the full battery used
//! by the acceptance suite.

use std::collections::HashSet;

use num_bigint::BigUint;

use crate::colorings::{
    count_colored, enumerate_colored, from_board, to_board, ColorScheme,
};
use crate::comp::{alpha, alpha_inv, beta, beta_inv, enumerate_family, fibonacci, RestrictedFamily};
use crate::ladder::{colored_to_tree, enumerate_trees, tree_to_colored};
use crate::multicomp::{colored_from_2comp, colored_to_2comp, enumerate_2comp, paired_scheme};
use crate::ocps::{colored_from_ocps, colored_to_ocps, enumerate_ocps, ocps_decode, ocps_encode, xi, xi_inv};
use crate::partitions::{
    classify, enumerate_ncn_indecomposable, enumerate_partitions, enumerate_totally_nested,
    ncn_counts, phi, phi_inv,
};
use crate::series::{invert_transform, rational_coeffs, CoeffSeq};
use crate::unimodal::{
    colored_to_unimodal, decompose, enumerate_unimodal, for_each_unimodal, oplus, psi, psi_inv,
    unimodal_to_colored, Side,
};
use crate::words::{
    check_word, colored_to_word, enumerate_words, jacobsthal_comp_a, jacobsthal_comp_a_inv,
    jacobsthal_comp_b, jacobsthal_comp_b_inv, jacobsthal_word_c, jacobsthal_word_c_inv,
    jacobsthal_word_d, jacobsthal_word_d_inv, scheme_constraint, word_to_colored, WordConstraint,
};

/// Outcome of one named check group.
#[derive(Debug, Clone)]
pub struct CheckReport {
    pub name: &'static str,
    /// Largest n actually exercised.
    pub bound: usize,
    pub passed: bool,
    pub detail: String,
}

impl CheckReport {
    fn from_failures(name: &'static str, bound: usize, failures: Vec<String>) -> Self {
        CheckReport {
            name,
            bound,
            passed: failures.is_empty(),
            detail: failures.join("; "),
        }
    }
}

/// Runs every check group, capped at `max_n`.
pub fn run_all(max_n: usize) -> Vec<CheckReport> {
    vec![
        check_family_counts(max_n),
        check_alpha_beta(max_n),
        check_count_tables(max_n),
        check_boards(max_n),
        check_word_codecs(max_n),
        check_jacobsthal_maps(max_n),
        check_ladder_trees(max_n),
        check_partition_counts(max_n),
        check_phi(max_n),
        check_psi_and_oplus(max_n),
        check_unimodal_bijection(max_n),
        check_ocps_codec(max_n),
        check_ocps_bijection(max_n),
        check_two_compositions(max_n),
        check_series_identities(max_n),
    ]
}

/// Paper prefixes for the counting sequences, used as fixed references.
pub fn known_prefix(scheme: ColorScheme) -> &'static [u64] {
    match scheme {
        ColorScheme::FibPlus1 => &[1, 3, 8, 22, 60, 164, 448],
        ColorScheme::Fib => &[1, 2, 5, 12, 29, 70],
        ColorScheme::FibMinus1 => &[],
        ColorScheme::FibEven => &[1, 4, 15, 56, 209, 780, 2911, 10864],
        ColorScheme::FibOdd => &[1, 3, 10, 34, 116, 396, 1352, 4616],
    }
}

pub fn check_family_counts(max_n: usize) -> CheckReport {
    let bound = max_n.min(16);
    let mut failures = Vec::new();
    for n in 1..=bound {
        let k = n as u64;
        let cases = [
            (RestrictedFamily::OneTwo, fibonacci(k + 1)),
            (RestrictedFamily::Odd, fibonacci(k)),
            (RestrictedFamily::GreaterThanOne, fibonacci(k - 1)),
        ];
        for (family, expected) in cases {
            let got = enumerate_family(family, n).len();
            if BigUint::from(got) != expected {
                failures.push(format!("{family} n={n}: {got} != {expected}"));
            }
        }
    }
    CheckReport::from_failures("family-counts", bound, failures)
}

pub fn check_alpha_beta(max_n: usize) -> CheckReport {
    let bound = max_n.min(14);
    let mut failures = Vec::new();
    for n in 1..=bound {
        let dom = enumerate_family(RestrictedFamily::OneTwo, n);
        let mut images = HashSet::new();
        for c in &dom {
            match alpha(c).and_then(|img| alpha_inv(&img).map(|back| (img, back))) {
                Ok((img, back)) if back == *c => {
                    images.insert(img);
                }
                other => failures.push(format!("alpha round trip at {c}: {other:?}")),
            }
        }
        if images.len() != enumerate_family(RestrictedFamily::Odd, n + 1).len() {
            failures.push(format!("alpha image size off at n={n}"));
        }

        let dom = enumerate_family(RestrictedFamily::Odd, n);
        let mut images = HashSet::new();
        for c in &dom {
            match beta(c).and_then(|img| beta_inv(&img).map(|back| (img, back))) {
                Ok((img, back)) if back == *c => {
                    images.insert(img);
                }
                other => failures.push(format!("beta round trip at {c}: {other:?}")),
            }
        }
        if images.len() != enumerate_family(RestrictedFamily::GreaterThanOne, n + 1).len() {
            failures.push(format!("beta image size off at n={n}"));
        }
    }
    CheckReport::from_failures("alpha-beta", bound, failures)
}

pub fn check_count_tables(max_n: usize) -> CheckReport {
    let bound = max_n.min(10);
    let mut failures = Vec::new();
    for scheme in ColorScheme::ALL {
        let prefix = known_prefix(scheme);
        for n in 1..=bound {
            let counted = count_colored(scheme, n);
            let enumerated = enumerate_colored(scheme, n).count();
            if BigUint::from(enumerated) != counted {
                failures.push(format!("{scheme} n={n}: enumerated {enumerated} vs {counted}"));
            }
            if let Some(&expected) = prefix.get(n - 1) {
                if counted != BigUint::from(expected) {
                    failures.push(format!("{scheme} n={n}: {counted} != reference {expected}"));
                }
            }
        }
    }
    CheckReport::from_failures("count-tables", bound, failures)
}

pub fn check_boards(max_n: usize) -> CheckReport {
    let bound = max_n.min(10);
    let mut failures = Vec::new();
    for scheme in ColorScheme::ALL {
        for n in 1..=bound {
            for cc in enumerate_colored(scheme, n) {
                let board = to_board(&cc);
                match from_board(&board, scheme) {
                    Ok(back) if back == cc => {}
                    other => {
                        failures.push(format!("{scheme} n={n}: board round trip {other:?}"));
                        break;
                    }
                }
            }
        }
    }
    CheckReport::from_failures("board-round-trip", bound, failures)
}

pub fn check_word_codecs(max_n: usize) -> CheckReport {
    let bound = max_n.min(12);
    let mut failures = Vec::new();
    for scheme in [ColorScheme::FibPlus1, ColorScheme::Fib, ColorScheme::FibEven] {
        let constraint = scheme_constraint(scheme).unwrap();
        for n in 1..=bound {
            let len = n - 1;
            let base = constraint.alphabet() as usize;
            let mut seen = vec![false; base.pow(len as u32)];
            let mut count = 0usize;
            let round_trip = n <= 10;
            for cc in enumerate_colored(scheme, n) {
                let word = match colored_to_word(&cc) {
                    Ok(w) => w,
                    Err(e) => {
                        failures.push(format!("{scheme} n={n}: {e}"));
                        continue;
                    }
                };
                if word.len() != len || !check_word(&word, constraint).unwrap_or(false) {
                    failures.push(format!("{scheme} n={n}: bad image {word}"));
                    continue;
                }
                if round_trip && word_to_colored(&word, scheme).ok().as_ref() != Some(&cc) {
                    failures.push(format!("{scheme} n={n}: word {word} does not invert"));
                }
                let rank = word.letters().iter().fold(0usize, |a, &l| a * base + l as usize);
                if seen[rank] {
                    failures.push(format!("{scheme} n={n}: duplicate image {word}"));
                }
                seen[rank] = true;
                count += 1;
            }
            // completeness: every constrained word is hit
            let mut valid = 0usize;
            for (rank, hit) in seen.iter().enumerate() {
                let mut letters = vec![0u8; len];
                let mut x = rank;
                for slot in letters.iter_mut().rev() {
                    *slot = (x % base) as u8;
                    x /= base;
                }
                let word = crate::words::Word::new(letters, constraint.alphabet()).unwrap();
                if check_word(&word, constraint).unwrap() {
                    valid += 1;
                    if !hit {
                        failures.push(format!("{scheme} n={n}: word {word} never reached"));
                    }
                }
            }
            if valid != count {
                failures.push(format!("{scheme} n={n}: {count} images vs {valid} words"));
            }
        }
    }
    // the position walk of the sparse family always starts and ends on 0
    for n in 2..=bound {
        for cc in enumerate_colored(ColorScheme::FibMinus1, n) {
            let w = colored_to_word(&cc).unwrap();
            if w.letters().first() != Some(&0) || w.letters().last() != Some(&0) {
                failures.push(format!("boundary letters nonzero at n={n}"));
            }
        }
    }
    CheckReport::from_failures("word-codecs", bound, failures)
}

pub fn check_jacobsthal_maps(max_n: usize) -> CheckReport {
    let bound = max_n.min(12);
    let mut failures = Vec::new();
    for n in 2..=bound {
        let colored: Vec<_> = enumerate_colored(ColorScheme::FibMinus1, n).collect();

        let mut a_images = HashSet::new();
        for cc in &colored {
            match jacobsthal_comp_a(cc) {
                Ok(img)
                    if img.total() == n - 1
                        && img.last_part() % 2 == 1
                        && jacobsthal_comp_a_inv(&img).ok().as_ref() == Some(cc) =>
                {
                    a_images.insert(img);
                }
                other => failures.push(format!("tail-odd map n={n}: {other:?}")),
            }
        }
        let ending_odd: Vec<_> = crate::util::compositions_with(n - 1, |_| true)
            .into_iter()
            .filter(|p| p.last().unwrap() % 2 == 1)
            .collect();
        if a_images.len() != ending_odd.len() {
            failures.push(format!(
                "tail-odd image {} vs {} at n={n}",
                a_images.len(),
                ending_odd.len()
            ));
        }

        let mut b_images = HashSet::new();
        for parts in &ending_odd {
            let c = crate::comp::Composition::new(parts.clone()).unwrap();
            match jacobsthal_comp_b(&c) {
                Ok(img)
                    if img.total() == n
                        && img.last_part() % 2 == 0
                        && jacobsthal_comp_b_inv(&img).ok() == Some(c.clone()) =>
                {
                    b_images.insert(img);
                }
                other => failures.push(format!("tail-even map n={n}: {other:?}")),
            }
        }
        let ending_even = crate::util::compositions_with(n, |_| true)
            .into_iter()
            .filter(|p| p.last().unwrap() % 2 == 0)
            .count();
        if b_images.len() != ending_even {
            failures.push(format!("tail-even image off at n={n}"));
        }

        let mut c_images = HashSet::new();
        for cc in &colored {
            match jacobsthal_word_c(cc) {
                Ok(w)
                    if w.len() == n - 2
                        && check_word(&w, WordConstraint::OddRunsForbidden12).unwrap()
                        && jacobsthal_word_c_inv(&w).ok().as_ref() == Some(cc) =>
                {
                    c_images.insert(w);
                }
                other => failures.push(format!("paired-word map n={n}: {other:?}")),
            }
        }
        if c_images.len() != enumerate_words(WordConstraint::OddRunsForbidden12, n - 2).count() {
            failures.push(format!("paired-word image off at n={n}"));
        }

        if n >= 3 {
            let mut d_images = HashSet::new();
            for cc in &colored {
                match jacobsthal_word_d(cc) {
                    Ok(w)
                        if w.len() == n - 3
                            && check_word(&w, WordConstraint::NoAdjacentNonzero).unwrap()
                            && jacobsthal_word_d_inv(&w).ok().as_ref() == Some(cc) =>
                    {
                        d_images.insert(w);
                    }
                    other => failures.push(format!("sparse-word map n={n}: {other:?}")),
                }
            }
            if d_images.len() != enumerate_words(WordConstraint::NoAdjacentNonzero, n - 3).count()
            {
                failures.push(format!("sparse-word image off at n={n}"));
            }
        }
    }
    CheckReport::from_failures("jacobsthal-maps", bound, failures)
}

pub fn check_ladder_trees(max_n: usize) -> CheckReport {
    let bound = max_n.min(8);
    let bijection_bound = bound.min(6);
    let mut failures = Vec::new();
    for n in 1..=bijection_bound {
        let trees = enumerate_trees(n).unwrap();
        let mut images = HashSet::new();
        for cc in enumerate_colored(ColorScheme::FibEven, n) {
            match colored_to_tree(&cc) {
                Ok(t) if t.is_spanning_tree() && tree_to_colored(&t).ok().as_ref() == Some(&cc) => {
                    images.insert(t);
                }
                other => failures.push(format!("tree codec n={n}: {other:?}")),
            }
        }
        if images.len() != trees.len() || !trees.iter().all(|t| images.contains(t)) {
            failures.push(format!("tree image mismatch at n={n}"));
        }
    }
    // structural property and edge bookkeeping on the full range
    for n in 1..=bound {
        for cc in enumerate_colored(ColorScheme::FibEven, n) {
            match colored_to_tree(&cc) {
                Ok(t) if t.is_spanning_tree() && t.edges().len() == 2 * n - 1 => {}
                other => {
                    failures.push(format!("spanning property n={n}: {other:?}"));
                    break;
                }
            }
        }
    }
    CheckReport::from_failures("ladder-trees", bound, failures)
}

pub fn check_partition_counts(max_n: usize) -> CheckReport {
    let bound = max_n.min(12);
    let filter_bound = max_n.min(9);
    let mut failures = Vec::new();
    let counts: Vec<usize> = (1..=bound)
        .map(|n| enumerate_ncn_indecomposable(n).len())
        .collect();
    for n in 3..=bound {
        if counts[n - 1] != 2 * counts[n - 2] {
            failures.push(format!("doubling fails at n={n}"));
        }
    }
    let ncn = ncn_counts(filter_bound.max(1));
    for n in 1..=filter_bound {
        let brute = enumerate_partitions(n)
            .into_iter()
            .filter(|p| {
                let f = classify(p);
                !f.crossing && !f.nesting
            })
            .count();
        if BigUint::from(brute) != ncn[n - 1] || ncn[n - 1] != fibonacci(2 * n as u64 - 1) {
            failures.push(format!("ncn count off at n={n}"));
        }
        let brute_tn = enumerate_partitions(n)
            .into_iter()
            .filter(|p| classify(p).totally_nested)
            .count();
        if brute_tn != enumerate_totally_nested(n).len() {
            failures.push(format!("totally nested count off at n={n}"));
        }
    }
    CheckReport::from_failures("partition-counts", bound, failures)
}

pub fn check_phi(max_n: usize) -> CheckReport {
    let bound = max_n.min(9);
    let mut failures = Vec::new();
    for n in 1..=bound {
        let dom = enumerate_ncn_indecomposable(n);
        let codom = enumerate_totally_nested(n);
        let mut images = HashSet::new();
        for p in &dom {
            match phi(p) {
                Ok(t) if &phi_inv(&t) == p => {
                    images.insert(t);
                }
                other => failures.push(format!("phi at {p}: {other:?}")),
            }
        }
        if images.len() != codom.len() || !codom.iter().all(|t| images.contains(t)) {
            failures.push(format!("phi image mismatch at n={n}"));
        }
    }
    CheckReport::from_failures("phi-bijection", bound, failures)
}

pub fn check_psi_and_oplus(max_n: usize) -> CheckReport {
    let bound = max_n.min(10);
    let mut failures = Vec::new();
    for n in 1..=bound {
        let dom = enumerate_totally_nested(n);
        let mut images = HashSet::new();
        for t in &dom {
            let u = psi(t);
            if !u.is_nested_form() || psi_inv(&u).ok().as_ref() != Some(t) {
                failures.push(format!("psi at {t}"));
            }
            images.insert(u);
        }
        let nested = enumerate_unimodal(n)
            .into_iter()
            .filter(|u| u.is_nested_form())
            .count();
        if images.len() != dom.len() || images.len() != nested {
            failures.push(format!("psi image mismatch at n={n}"));
        }
    }
    // chain associativity over nested-form blocks
    let assoc_total = max_n.min(9);
    let mut pool = Vec::new();
    for n in 1..=assoc_total.saturating_sub(2) {
        pool.extend(enumerate_totally_nested(n).iter().map(psi));
    }
    for a in &pool {
        for b in &pool {
            for c in &pool {
                if a.len() + b.len() + c.len() > assoc_total {
                    continue;
                }
                for s1 in [Side::Left, Side::Right] {
                    for s2 in [Side::Left, Side::Right] {
                        if oplus(&oplus(a, b, s1), c, s2) != oplus(a, &oplus(b, c, s2), s1) {
                            failures.push(format!("associativity fails on {a},{b},{c}"));
                        }
                    }
                }
            }
        }
    }
    CheckReport::from_failures("psi-oplus", bound, failures)
}

pub fn check_unimodal_bijection(max_n: usize) -> CheckReport {
    let bound = max_n.min(9);
    let mut failures = Vec::new();
    for n in 1..=bound {
        let all = enumerate_unimodal(n);
        let mut images = HashSet::new();
        for cc in enumerate_colored(ColorScheme::FibOdd, n) {
            match colored_to_unimodal(&cc) {
                Ok(u) if unimodal_to_colored(&u).ok().as_ref() == Some(&cc) => {
                    images.insert(u);
                }
                other => failures.push(format!("unimodal codec n={n}: {other:?}")),
            }
        }
        if images.len() != all.len() || !all.iter().all(|u| images.contains(u)) {
            failures.push(format!("unimodal image mismatch at n={n}"));
        }
        // the peeling decomposition never hits an ambiguous case
        for u in &all {
            if let Err(e) = decompose(u) {
                failures.push(format!("decompose {u}: {e}"));
            }
        }
    }
    // count identity on the wider range
    let count_bound = max_n.min(12);
    for n in 1..=count_bound {
        let mut total = 0usize;
        for_each_unimodal(n, |_| total += 1);
        if BigUint::from(total) != count_colored(ColorScheme::FibOdd, n) {
            failures.push(format!("|U({n})| != count"));
        }
    }
    CheckReport::from_failures("unimodal-bijection", bound, failures)
}

pub fn check_ocps_codec(max_n: usize) -> CheckReport {
    let bound = max_n.min(7);
    let mut failures = Vec::new();
    for n in 1..=bound {
        for o in enumerate_ocps(n).unwrap() {
            let s = ocps_encode(&o);
            // alternation is structural in the representation; decode must
            // return exactly the source
            if ocps_decode(&s).ok().as_ref() != Some(&o) {
                failures.push(format!("encode/decode at {o}"));
            }
        }
        let mut style = 0usize;
        for o in enumerate_ocps(n).unwrap() {
            if ocps_encode(&o).is_nested_style() {
                style += 1;
            }
        }
        let mut images = HashSet::new();
        for t in enumerate_totally_nested(n) {
            let s = xi(&t);
            if !s.is_nested_style() || xi_inv(&s).ok().as_ref() != Some(&t) {
                failures.push(format!("xi at {t}"));
            }
            images.insert(s.to_text());
        }
        if images.len() != style {
            failures.push(format!("xi image vs restricted strings at n={n}"));
        }
    }
    CheckReport::from_failures("ocps-codec", bound, failures)
}

pub fn check_ocps_bijection(max_n: usize) -> CheckReport {
    let bound = max_n.min(8);
    let mut failures = Vec::new();
    for n in 1..=bound {
        let all = enumerate_ocps(n).unwrap();
        let mut images = HashSet::new();
        for cc in enumerate_colored(ColorScheme::FibOdd, n) {
            match colored_to_ocps(&cc) {
                // a slide that broke alternation would surface here as an error
                Ok(o) if colored_from_ocps(&o).ok().as_ref() == Some(&cc) => {
                    images.insert(o);
                }
                other => failures.push(format!("ocps codec n={n}: {other:?}")),
            }
        }
        if images.len() != all.len() || !all.iter().all(|o| images.contains(o)) {
            failures.push(format!("ocps image mismatch at n={n}"));
        }
    }
    CheckReport::from_failures("ocps-bijection", bound, failures)
}

pub fn check_two_compositions(max_n: usize) -> CheckReport {
    let bound = max_n.min(10);
    let mut failures = Vec::new();
    for restriction in RestrictedFamily::ALL {
        let scheme = paired_scheme(restriction);
        for n in 1..=bound {
            let all = enumerate_2comp(restriction, n);
            let mut images = HashSet::new();
            for cc in enumerate_colored(scheme, n) {
                match colored_to_2comp(&cc, restriction) {
                    Ok(tc) if colored_from_2comp(&tc).ok().as_ref() == Some(&cc) => {
                        images.insert(tc);
                    }
                    other => failures.push(format!("2comp {restriction} n={n}: {other:?}")),
                }
            }
            if images.len() != all.len() || !all.iter().all(|tc| images.contains(tc)) {
                failures.push(format!("2comp image mismatch {restriction} n={n}"));
            }
        }
    }
    CheckReport::from_failures("two-compositions", bound, failures)
}

pub fn check_series_identities(max_n: usize) -> CheckReport {
    let bound = max_n.clamp(1, 40);
    let mut failures = Vec::new();
    use num_bigint::BigInt;
    for scheme in ColorScheme::ALL {
        let w = CoeffSeq::new(
            (1..=bound)
                .map(|k| BigInt::from(crate::colorings::color_count(scheme, k)))
                .collect(),
        )
        .unwrap();
        let transformed = invert_transform(&w);
        let direct = crate::colorings::counts_colored(scheme, bound);
        for n in 1..=bound {
            if transformed.get(n) != BigInt::from(direct[n - 1].clone()) {
                failures.push(format!("{scheme} series mismatch at n={n}"));
            }
        }
    }
    let lhs = invert_transform(&rational_coeffs(&[0, 1, -1], &[1, -2], 50).unwrap());
    let rhs = rational_coeffs(&[0, 1, -1], &[1, -3, 1], 50).unwrap();
    if lhs != rhs {
        failures.push("doubling-series identity fails".into());
    }
    CheckReport::from_failures("series-identities", bound, failures)
}

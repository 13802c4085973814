//! Deterministic ASCII and SVG drawings of boards, arc diagrams, and
//! ladder spanning trees.

use fibtile_core::{Board, LadderEdge, LadderSpanningTree, SeparatorKind, SetPartition};

const CELL: i64 = 40;

/// One line per nesting level of arcs (outermost on top), then the cell
/// row: cells as `.` (or `*` on a spot), separators as `|` (solid), `:`
/// (dotted), or a space.
pub fn board_ascii(board: &Board) -> String {
    let n = board.n();
    let width = 2 * n + 1;
    let mut lines = arc_rows(board.arcs().iter().copied().collect(), width, col);
    let mut row = String::with_capacity(width);
    row.push('[');
    for c in 1..=n {
        row.push(if board.spots().contains(&c) { '*' } else { '.' });
        if c < n {
            row.push(match board.separator_at(c) {
                Some(SeparatorKind::Solid) => '|',
                Some(SeparatorKind::Dotted) => ':',
                None => ' ',
            });
        }
    }
    row.push(']');
    lines.push(row);
    lines.join("\n")
}

/// Column of cell `i` in the bracketed row.
fn col(i: usize) -> usize {
    1 + 2 * (i - 1)
}

/// Lays arcs out bottom-up by span so nested arcs sit closer to the cells.
/// Rows are returned top row first. Arcs sharing only an endpoint may share
/// a row.
fn arc_rows(
    arcs: Vec<(usize, usize)>,
    width: usize,
    col: impl Fn(usize) -> usize,
) -> Vec<String> {
    if arcs.is_empty() {
        return Vec::new();
    }
    let mut sorted = arcs;
    sorted.sort_by_key(|&(i, j)| (j - i, i));
    let mut rows: Vec<Vec<(usize, usize)>> = Vec::new();
    for (i, j) in sorted {
        let slot = rows.iter_mut().find(|row| {
            row.iter().all(|&(a, b)| j <= a || b <= i)
        });
        match slot {
            Some(row) => row.push((i, j)),
            None => rows.push(vec![(i, j)]),
        }
    }
    let mut lines = Vec::new();
    for row in rows.iter().rev() {
        let mut line = vec![' '; width];
        for &(i, j) in row {
            let (a, b) = (col(i), col(j));
            line[a] = '.';
            line[b] = '.';
            for x in line.iter_mut().take(b).skip(a + 1) {
                *x = '-';
            }
        }
        lines.push(line.into_iter().collect());
    }
    lines
}

/// Cells as rects (`class="cell"`), separators as solid/dashed lines,
/// spots as circles (`class="spot"`), arcs as semicircular paths above.
pub fn board_svg(board: &Board) -> String {
    let n = board.n() as i64;
    let arc_height: i64 = if board.arcs().is_empty() {
        0
    } else {
        let deepest = board
            .arcs()
            .iter()
            .map(|&(i, j)| (j - i) as i64)
            .max()
            .unwrap();
        (deepest * CELL / 2).min(3 * CELL) + 10
    };
    let width = n * CELL + 20;
    let height = CELL + 20 + arc_height;
    let mut s = String::new();
    s.push_str(&format!(
        "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{width}\" height=\"{height}\" \
         viewBox=\"0 0 {width} {height}\">\n"
    ));
    let x0 = 10i64;
    let y0 = 10 + arc_height;
    for i in 0..n {
        s.push_str(&format!(
            "  <rect class=\"cell\" x=\"{}\" y=\"{y0}\" width=\"{CELL}\" height=\"{CELL}\" \
             fill=\"none\" stroke=\"#bbbbbb\"/>\n",
            x0 + i * CELL
        ));
    }
    s.push_str(&format!(
        "  <rect class=\"frame\" x=\"{x0}\" y=\"{y0}\" width=\"{}\" height=\"{CELL}\" \
         fill=\"none\" stroke=\"black\" stroke-width=\"2\"/>\n",
        n * CELL
    ));
    for (&p, &kind) in board.separators() {
        let x = x0 + p as i64 * CELL;
        let dash = match kind {
            SeparatorKind::Solid => "",
            SeparatorKind::Dotted => " stroke-dasharray=\"4 4\"",
        };
        s.push_str(&format!(
            "  <line class=\"sep\" x1=\"{x}\" y1=\"{y0}\" x2=\"{x}\" y2=\"{}\" \
             stroke=\"black\" stroke-width=\"2\"{dash}/>\n",
            y0 + CELL
        ));
    }
    for &c in board.spots() {
        let cx = x0 + (c as i64 - 1) * CELL + CELL / 2;
        s.push_str(&format!(
            "  <circle class=\"spot\" cx=\"{cx}\" cy=\"{}\" r=\"6\" fill=\"black\"/>\n",
            y0 + CELL / 2
        ));
    }
    for &(i, j) in board.arcs() {
        let xa = x0 + (i as i64 - 1) * CELL + CELL / 2;
        let xb = x0 + (j as i64 - 1) * CELL + CELL / 2;
        let r = (xb - xa) / 2;
        let ry = r.min(3 * CELL);
        s.push_str(&format!(
            "  <path class=\"arc\" d=\"M {xa} {y0} A {r} {ry} 0 0 1 {xb} {y0}\" \
             fill=\"none\" stroke=\"black\" stroke-width=\"2\"/>\n"
        ));
    }
    s.push_str("</svg>\n");
    s
}

/// Arc rows over a numbered point row.
pub fn partition_ascii(p: &SetPartition) -> String {
    let n = p.n();
    let label_width = n.to_string().len();
    let stride = label_width + 1;
    let width = n * stride;
    let pos = |i: usize| (i - 1) * stride + label_width / 2;
    let mut lines = arc_rows(p.arcs().into_iter().collect(), width, pos);
    let mut row = String::new();
    for i in 1..=n {
        row.push_str(&format!("{i:<label_width$}"));
        if i < n {
            row.push(' ');
        }
    }
    lines.push(row.trim_end().to_string());
    lines.join("\n")
}

/// Points on a baseline joined by semicircular arcs.
pub fn partition_svg(p: &SetPartition) -> String {
    let n = p.n() as i64;
    let max_span = p
        .arcs()
        .iter()
        .map(|&(i, j)| (j - i) as i64)
        .max()
        .unwrap_or(0);
    let arc_height = max_span * CELL / 2 + 10;
    let width = (n - 1) * CELL + 40;
    let height = arc_height + 40;
    let y = arc_height + 10;
    let x = |i: i64| 20 + (i - 1) * CELL;
    let mut s = format!(
        "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{width}\" height=\"{height}\" \
         viewBox=\"0 0 {width} {height}\">\n"
    );
    for &(i, j) in &p.arcs() {
        let (xa, xb) = (x(i as i64), x(j as i64));
        let r = (xb - xa) / 2;
        s.push_str(&format!(
            "  <path class=\"arc\" d=\"M {xa} {y} A {r} {r} 0 0 1 {xb} {y}\" fill=\"none\" \
             stroke=\"black\" stroke-width=\"2\"/>\n"
        ));
    }
    for i in 1..=n {
        s.push_str(&format!(
            "  <circle class=\"point\" cx=\"{}\" cy=\"{y}\" r=\"4\" fill=\"black\"/>\n",
            x(i)
        ));
        s.push_str(&format!(
            "  <text x=\"{}\" y=\"{}\" text-anchor=\"middle\" font-size=\"12\">{i}</text>\n",
            x(i),
            y + 20
        ));
    }
    s.push_str("</svg>\n");
    s
}

/// Three-row picture: top rail, verticals, bottom rail.
pub fn tree_ascii(t: &LadderSpanningTree) -> String {
    let n = t.n();
    let mut top = String::new();
    let mut mid = String::new();
    let mut bottom = String::new();
    for i in 1..=n {
        top.push('o');
        bottom.push('o');
        mid.push(if t.contains(LadderEdge::Vert(i)) { '|' } else { ' ' });
        if i < n {
            top.push(if t.contains(LadderEdge::Top(i)) { '-' } else { ' ' });
            bottom.push(if t.contains(LadderEdge::Bottom(i)) { '-' } else { ' ' });
            mid.push(' ');
        }
    }
    format!("{top}\n{}\n{bottom}", mid.trim_end())
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::{BTreeMap, BTreeSet};

    fn board(n: usize, solid: &[usize], dotted: &[usize], spots: &[usize]) -> Board {
        let mut sep = BTreeMap::new();
        for &p in solid {
            sep.insert(p, SeparatorKind::Solid);
        }
        for &p in dotted {
            sep.insert(p, SeparatorKind::Dotted);
        }
        Board::new(n, sep, spots.iter().copied().collect(), BTreeSet::new()).unwrap()
    }

    #[test]
    fn ascii_blank_board() {
        assert_eq!(board_ascii(&board(1, &[], &[], &[])), "[.]");
    }

    #[test]
    fn ascii_separators_and_spots() {
        let b = board(4, &[2], &[3], &[1, 4]);
        assert_eq!(board_ascii(&b), "[* .|.:*]");
    }

    #[test]
    fn svg_is_deterministic() {
        let b = board(3, &[1], &[], &[2]);
        assert_eq!(board_svg(&b), board_svg(&b));
        assert_eq!(board_svg(&b).matches("class=\"cell\"").count(), 3);
        assert_eq!(board_svg(&b).matches("class=\"spot\"").count(), 1);
    }

    #[test]
    fn partition_rows() {
        let p = SetPartition::parse("14|23").unwrap();
        let text = partition_ascii(&p);
        let lines: Vec<&str> = text.lines().collect();
        assert_eq!(lines.last().unwrap().trim_end(), "1 2 3 4");
        // inner arc sits below the outer one
        assert_eq!(lines.len(), 3);
        assert!(lines[0].contains(".-----."));
        assert!(lines[1].contains(".-."));
    }
}

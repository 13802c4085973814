//! Small shared helpers.

/// Union-find over `0..n` with path halving.
pub(crate) struct DisjointSet {
    parent: Vec<usize>,
}

impl DisjointSet {
    pub fn new(n: usize) -> Self {
        DisjointSet {
            parent: (0..n).collect(),
        }
    }

    pub fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    pub fn union(&mut self, a: usize, b: usize) {
        let ra = self.find(a);
        let rb = self.find(b);
        if ra != rb {
            self.parent[rb] = ra;
        }
    }

    /// Groups of indices sharing a root, ordered by smallest member.
    pub fn groups(&mut self) -> Vec<Vec<usize>> {
        let n = self.parent.len();
        let mut by_root: std::collections::BTreeMap<usize, Vec<usize>> = Default::default();
        for x in 0..n {
            let r = self.find(x);
            by_root.entry(r).or_default().push(x);
        }
        let mut groups: Vec<Vec<usize>> = by_root.into_values().collect();
        groups.sort_by_key(|g| g[0]);
        groups
    }
}

/// All compositions of `n` whose parts satisfy `allowed`, in lexicographic
/// order on the part sequences.
pub(crate) fn compositions_with<F>(n: usize, allowed: F) -> Vec<Vec<usize>>
where
    F: Fn(usize) -> bool + Copy,
{
    let mut out = Vec::new();
    let mut stack = Vec::new();
    gen_compositions(n, allowed, &mut stack, &mut out);
    out
}

fn gen_compositions<F>(rest: usize, allowed: F, stack: &mut Vec<usize>, out: &mut Vec<Vec<usize>>)
where
    F: Fn(usize) -> bool + Copy,
{
    if rest == 0 {
        if !stack.is_empty() {
            out.push(stack.clone());
        }
        return;
    }
    for part in 1..=rest {
        if allowed(part) {
            stack.push(part);
            gen_compositions(rest - part, allowed, stack, out);
            stack.pop();
        }
    }
}

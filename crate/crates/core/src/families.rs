//! Extremal families, exhaustive enumeration, and random sampling of mops.
//!
//! `H_k` is the family of `k` hub-linked triangles with secure total
//! domination number `2k = floor(2n/3)` (upper bound tight). `G_k` is the
//! fan on `3k + 1` vertices with secure total domination number
//! `k + 1 = ceil((n+2)/3)` (lower bound tight). Both generators build the
//! edge list as given and recover the boundary cycle through mop
//! recognition, so no hand-derived embedding can go wrong.
//!
//! Triangulations of the convex `n`-gon are in bijection with plane binary
//! trees with `n - 2` internal nodes: the triangle resting on a segment is
//! determined by its apex, which splits the segment in two. Enumeration
//! recurses over apex choices; uniform sampling draws a uniformly random
//! binary tree by leaf insertion and decodes it the same way.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use crate::graph::Graph;
use crate::mop::{is_maximal_outerplanar, MopGraph};

/// Largest order accepted by [`for_each_mop`] / [`enumerate_mops`].
pub const MOP_ENUMERATION_CAP: usize = 14;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum FamilyError {
    #[error("exhaustive enumeration supports 3 <= n <= {cap}, got n = {n}")]
    SizeCapExceeded { n: usize, cap: usize },
}

/// The upper-bound-tight family: triangles `a_i b_i c_i` for `i = 1..k`,
/// links `c_i a_{i+1}`, and hub edges `a_1 a_i`, `a_1 c_i` for `i >= 2`.
/// Vertex ids follow the boundary: `a_i, b_i, c_i` map to
/// `3(i-1), 3(i-1)+1, 3(i-1)+2`.
pub fn make_h_k(k: usize) -> MopGraph {
    assert!(k >= 1, "k must be at least 1");
    let n = 3 * k;
    let a = |i: usize| 3 * (i - 1);
    let b = |i: usize| 3 * (i - 1) + 1;
    let c = |i: usize| 3 * (i - 1) + 2;
    let mut edges = Vec::with_capacity(2 * n - 3);
    for i in 1..=k {
        edges.push((a(i), b(i)));
        edges.push((b(i), c(i)));
        edges.push((c(i), a(i)));
    }
    for i in 1..k {
        edges.push((c(i), a(i + 1)));
    }
    for i in 2..=k {
        edges.push((a(1), a(i)));
        edges.push((a(1), c(i)));
    }
    let g = Graph::from_edges(n, &edges).expect("family edge list is simple");
    is_maximal_outerplanar(&g).expect("H_k is maximal outerplanar")
}

/// The lower-bound-tight family: the fan on `3k + 1` vertices, with `v_1`
/// adjacent to every other vertex and `v_2, .., v_{3k+1}` forming a path.
/// Vertex ids are `v_i -> i - 1`.
pub fn make_g_k(k: usize) -> MopGraph {
    assert!(k >= 1, "k must be at least 1");
    let n = 3 * k + 1;
    let mut edges = Vec::with_capacity(2 * n - 3);
    for i in 1..n - 1 {
        edges.push((i, i + 1));
    }
    for i in 1..n {
        edges.push((0, i));
    }
    let g = Graph::from_edges(n, &edges).expect("family edge list is simple");
    is_maximal_outerplanar(&g).expect("G_k is maximal outerplanar")
}

/// Calls `f` once for every triangulation of the convex `n`-gon. There are
/// `Catalan(n - 2)` of them; no isomorphism dedup is attempted.
pub fn for_each_mop<F: FnMut(MopGraph)>(n: usize, mut f: F) -> Result<(), FamilyError> {
    if !(3..=MOP_ENUMERATION_CAP).contains(&n) {
        return Err(FamilyError::SizeCapExceeded {
            n,
            cap: MOP_ENUMERATION_CAP,
        });
    }
    let mut work = vec![(0usize, n - 1)];
    let mut diags = Vec::with_capacity(n - 3);
    recurse(&mut work, &mut diags, n, &mut f);
    Ok(())
}

/// Picks the apex of the triangle resting on the top work segment, records
/// the chords it induces, and recurses until no segment can be split.
fn recurse<F: FnMut(MopGraph)>(
    work: &mut Vec<(usize, usize)>,
    diags: &mut Vec<(usize, usize)>,
    n: usize,
    f: &mut F,
) {
    let Some((a, b)) = work.pop() else {
        f(MopGraph::from_diagonals(n, diags).expect("enumerated diagonals form a mop"));
        return;
    };
    debug_assert!(b > a + 1);
    for apex in a + 1..b {
        let mut pushed_work = 0;
        let mut pushed_diags = 0;
        if apex > a + 1 {
            diags.push((a, apex));
            pushed_diags += 1;
            work.push((a, apex));
            pushed_work += 1;
        }
        if b > apex + 1 {
            diags.push((apex, b));
            pushed_diags += 1;
            work.push((apex, b));
            pushed_work += 1;
        }
        recurse(work, diags, n, f);
        for _ in 0..pushed_work {
            work.pop();
        }
        for _ in 0..pushed_diags {
            diags.pop();
        }
    }
    work.push((a, b));
}

/// All triangulations of the `n`-gon, in enumeration order.
pub fn enumerate_mops(n: usize) -> Result<Vec<MopGraph>, FamilyError> {
    let mut out = Vec::new();
    for_each_mop(n, |m| out.push(m))?;
    Ok(out)
}

/// A uniformly random triangulation of the `n`-gon; deterministic per seed.
pub fn random_mop(n: usize, seed: u64) -> MopGraph {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    random_mop_with_rng(n, &mut rng)
}

/// As [`random_mop`], drawing from a caller-supplied generator.
pub fn random_mop_with_rng<R: Rng>(n: usize, rng: &mut R) -> MopGraph {
    assert!(n >= 3, "a mop needs at least 3 vertices");
    let tree = random_binary_tree(n - 2, rng);
    let diags = tree_to_diagonals(&tree, n);
    MopGraph::from_diagonals(n, &diags).expect("decoded tree is a triangulation")
}

/// A node of a plane binary tree; leaves have no children.
#[derive(Clone, Copy)]
struct TreeNode {
    children: Option<(usize, usize)>,
}

struct BinaryTree {
    nodes: Vec<TreeNode>,
    root: usize,
}

/// Leaf-insertion sampling of a uniformly random plane binary tree with
/// `internal` internal nodes: repeatedly pick an existing node and a side
/// uniformly at random, and graft a new leaf there.
fn random_binary_tree<R: Rng>(internal: usize, rng: &mut R) -> BinaryTree {
    let mut nodes = vec![TreeNode { children: None }];
    let mut parent: Vec<Option<(usize, u8)>> = vec![None];
    let mut root = 0;
    for _ in 0..internal {
        let v = rng.random_range(0..nodes.len());
        let side = rng.random_range(0..2u8);
        let leaf = nodes.len();
        nodes.push(TreeNode { children: None });
        parent.push(None);
        let joint = nodes.len();
        let children = if side == 0 { (v, leaf) } else { (leaf, v) };
        nodes.push(TreeNode {
            children: Some(children),
        });
        parent.push(parent[v]);
        match parent[v] {
            Some((p, slot)) => {
                let (l, r) = nodes[p].children.expect("parent is internal");
                nodes[p].children = Some(if slot == 0 { (joint, r) } else { (l, joint) });
            }
            None => root = joint,
        }
        parent[v] = Some((joint, if side == 0 { 0 } else { 1 }));
        parent[leaf] = Some((joint, if side == 0 { 1 } else { 0 }));
    }
    BinaryTree { nodes, root }
}

/// Reads the tree as a triangulation of the `n`-gon over base edge
/// `(0, n-1)`: an internal node on segment `(a, b)` whose left subtree has
/// `l` leaves is the triangle `(a, a+l, b)`.
fn tree_to_diagonals(tree: &BinaryTree, n: usize) -> Vec<(usize, usize)> {
    let total = tree.nodes.len();
    let mut leaves = vec![0usize; total];
    // post-order leaf counts
    let mut stack = vec![(tree.root, false)];
    while let Some((v, expanded)) = stack.pop() {
        match tree.nodes[v].children {
            None => leaves[v] = 1,
            Some((l, r)) => {
                if expanded {
                    leaves[v] = leaves[l] + leaves[r];
                } else {
                    stack.push((v, true));
                    stack.push((l, false));
                    stack.push((r, false));
                }
            }
        }
    }
    debug_assert_eq!(leaves[tree.root], n - 1);

    let mut diags = Vec::with_capacity(n.saturating_sub(3));
    let mut walk = vec![(tree.root, 0usize, n - 1)];
    while let Some((v, a, b)) = walk.pop() {
        match tree.nodes[v].children {
            None => debug_assert_eq!(b, a + 1),
            Some((l, r)) => {
                let apex = a + leaves[l];
                if apex > a + 1 {
                    diags.push((a, apex));
                }
                if b > apex + 1 {
                    diags.push((apex, b));
                }
                walk.push((l, a, apex));
                walk.push((r, apex, b));
            }
        }
    }
    diags
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::HashSet;

    /// Independent count of triangulations: `Catalan(m) = C(2m, m) / (m+1)`.
    fn catalan(m: usize) -> u64 {
        let mut num: u128 = 1;
        let mut den: u128 = 1;
        for i in 0..m as u128 {
            num *= 2 * m as u128 - i;
            den *= i + 1;
        }
        (num / den / (m as u128 + 1)) as u64
    }

    #[test]
    fn h_family_structure() {
        let h1 = make_h_k(1);
        assert_eq!(h1.n(), 3);
        assert_eq!(h1.edge_count(), 3);

        let h4 = make_h_k(4);
        assert_eq!(h4.n(), 12);
        assert_eq!(h4.edge_count(), 21);
        let deg2: Vec<usize> = h4
            .degrees()
            .iter()
            .enumerate()
            .filter(|&(_, &d)| d == 2)
            .map(|(p, _)| h4.label(p))
            .collect();
        // exactly the b_i have degree 2
        assert_eq!(deg2.len(), 4);
        for l in deg2 {
            assert_eq!(l % 3, 1);
        }
    }

    #[test]
    fn g_family_structure() {
        let g1 = make_g_k(1);
        assert_eq!(g1.n(), 4);
        assert_eq!(g1.edge_count(), 5);

        let g4 = make_g_k(4);
        assert_eq!(g4.n(), 13);
        let hub = g4.labels().iter().position(|&l| l == 0).unwrap();
        assert_eq!(g4.degrees()[hub], 12);
    }

    #[test]
    fn families_are_mops_up_to_k8() {
        for k in 1..=8 {
            let h = make_h_k(k);
            assert!(is_maximal_outerplanar(&h.to_graph()).is_ok());
            let g = make_g_k(k);
            assert!(is_maximal_outerplanar(&g.to_graph()).is_ok());
        }
    }

    #[test]
    fn enumeration_counts_match_catalan() {
        for n in 3..=9 {
            let mut count = 0u64;
            for_each_mop(n, |_| count += 1).unwrap();
            assert_eq!(count, catalan(n - 2), "n = {n}");
        }
    }

    #[test]
    fn enumeration_has_no_duplicates() {
        for n in 3..=8 {
            let mut seen = HashSet::new();
            for_each_mop(n, |m| {
                assert!(seen.insert(m.diagonals().to_vec()));
            })
            .unwrap();
        }
    }

    #[test]
    fn enumeration_cap() {
        assert!(matches!(
            for_each_mop(2, |_| ()),
            Err(FamilyError::SizeCapExceeded { .. })
        ));
        assert!(matches!(
            for_each_mop(15, |_| ()),
            Err(FamilyError::SizeCapExceeded { .. })
        ));
    }

    #[test]
    fn random_triangle_and_determinism() {
        assert_eq!(random_mop(3, 7).diagonals(), &[]);
        let a = random_mop(50, 12345);
        let b = random_mop(50, 12345);
        assert_eq!(a, b);
        let c = random_mop(50, 12346);
        // overwhelmingly likely to differ
        assert_ne!(a, c);
    }

    #[test]
    fn random_mops_are_valid() {
        for seed in 0..200 {
            let n = 3 + (seed as usize * 7) % 40;
            let m = random_mop(n, seed);
            assert_eq!(m.n(), n);
            assert_eq!(m.edge_count(), 2 * n - 3);
        }
    }

    proptest::proptest! {
        /// Recognition is the inverse of sampling: the unique boundary of
        /// a sampled mop is the cycle it was built on.
        #[test]
        fn recognition_inverts_sampling(n in 3usize..50, seed in proptest::num::u64::ANY) {
            let m = random_mop(n, seed);
            let recovered = is_maximal_outerplanar(&m.to_graph()).unwrap();
            proptest::prop_assert_eq!(recovered, m);
        }
    }
}

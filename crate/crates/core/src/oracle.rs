//! Brute-force references for testing. Nothing here touches the tree.

use std::collections::{BTreeMap, BTreeSet};

/// Order-independent description of an implicit suffix tree, using full
/// label strings rather than index pairs.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct TreeDescription {
    /// Strings spelled by internal nodes, the root (`""`) included.
    pub internal: BTreeSet<Vec<u8>>,
    /// 1-based start positions of the suffixes represented by leaves.
    pub leaves: BTreeSet<u64>,
    /// `(parent string, child string)` for every edge.
    pub edges: BTreeSet<(Vec<u8>, Vec<u8>)>,
}

/// Length of the longest suffix of `w` that occurs at least twice.
pub fn naive_lrs(w: &[u8]) -> usize {
    let n = w.len();
    (1..n)
        .rev()
        .find(|&len| {
            let suffix = &w[n - len..];
            (0..n - len).any(|i| &w[i..i + len] == suffix)
        })
        .unwrap_or(0)
}

/// The compacted trie of all suffixes of `w`, without a terminator.
pub fn naive_suffix_tree(w: &[u8]) -> TreeDescription {
    let n = w.len();
    let mut right: BTreeMap<&[u8], BTreeSet<u8>> = BTreeMap::new();
    for i in 0..n {
        for j in i + 1..n {
            right.entry(&w[i..j]).or_default().insert(w[j]);
        }
    }
    let mut internal: BTreeSet<Vec<u8>> = right
        .into_iter()
        .filter(|(_, ext)| ext.len() >= 2)
        .map(|(s, _)| s.to_vec())
        .collect();
    // The empty string branches whenever two distinct symbols occur, but the
    // root exists regardless.
    internal.insert(Vec::new());

    let lrs = naive_lrs(w);
    let leaves: BTreeSet<u64> = (1..=(n - lrs) as u64).collect();

    let mut edges = BTreeSet::new();
    let children = internal
        .iter()
        .filter(|s| !s.is_empty())
        .cloned()
        .chain(leaves.iter().map(|&k| w[k as usize - 1..].to_vec()));
    for s in children {
        let parent = (0..s.len())
            .rev()
            .map(|len| &s[..len])
            .find(|p| internal.contains(*p))
            .expect("root is a prefix of everything")
            .to_vec();
        edges.insert((parent, s));
    }
    TreeDescription {
        internal,
        leaves,
        edges,
    }
}

/// 1-based starts of every occurrence of `p` in `w`.
pub fn naive_occurrences(w: &[u8], p: &[u8]) -> Vec<u64> {
    if p.is_empty() || p.len() > w.len() {
        return Vec::new();
    }
    (0..=w.len() - p.len())
        .filter(|&i| &w[i..i + p.len()] == p)
        .map(|i| i as u64 + 1)
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn strings(v: &[&str]) -> BTreeSet<Vec<u8>> {
        v.iter().map(|s| s.as_bytes().to_vec()).collect()
    }

    #[test]
    fn lrs_values() {
        assert_eq!(naive_lrs(b"abaca"), 1);
        assert_eq!(naive_lrs(b""), 0);
        assert_eq!(naive_lrs(b"aaaa"), 3);
        assert_eq!(naive_lrs(b"abaab"), 2);
        assert_eq!(naive_lrs(b"a"), 0);
    }

    #[test]
    fn abaca_tree() {
        let d = naive_suffix_tree(b"abaca");
        assert_eq!(d.internal, strings(&["", "a"]));
        assert_eq!(d.leaves, [1, 2, 3, 4].into_iter().collect());
        assert!(d.edges.contains(&(b"a".to_vec(), b"abaca".to_vec())));
        assert!(d.edges.contains(&(b"".to_vec(), b"baca".to_vec())));
        assert_eq!(d.edges.len(), 5);
    }

    #[test]
    fn single_leaf() {
        let d = naive_suffix_tree(b"a");
        assert_eq!(d.internal, strings(&[""]));
        assert_eq!(d.leaves.len(), 1);
        assert_eq!(d.edges.len(), 1);
    }

    #[test]
    fn abaab_tree() {
        let d = naive_suffix_tree(b"abaab");
        assert_eq!(d.internal, strings(&["", "a"]));
        assert_eq!(d.leaves, [1, 2, 3].into_iter().collect());
    }

    #[test]
    fn occurrences() {
        assert_eq!(naive_occurrences(b"abaab", b"a"), vec![1, 3, 4]);
        assert_eq!(naive_occurrences(b"abaab", b"abaab"), vec![1]);
        assert_eq!(naive_occurrences(b"aaaa", b"aa"), vec![1, 2, 3]);
        assert!(naive_occurrences(b"ab", b"abc").is_empty());
    }
}

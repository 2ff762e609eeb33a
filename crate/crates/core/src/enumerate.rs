//! Enumeration shared by the windowed and the finite separation generators:
//! separator subsets, then every assignment of the free components of the
//! rest to the two sides.

use std::collections::BTreeSet;

use crate::error::Result;

/// Calls `f` on every subset of `items` with at most `max` elements, in
/// order of size and then lexicographically by position.
pub(crate) fn subsets_up_to<T, F>(items: &[T], max: usize, mut f: F) -> Result<()>
where
    T: Copy,
    F: FnMut(&[T]) -> Result<()>,
{
    let mut buf = Vec::with_capacity(max);
    for size in 0..=max.min(items.len()) {
        let mut idx: Vec<usize> = (0..size).collect();
        loop {
            buf.clear();
            buf.extend(idx.iter().map(|&i| items[i]));
            f(&buf)?;
            let n = items.len();
            let Some(i) = (0..size).rev().find(|&i| idx[i] < n - size + i) else {
                break;
            };
            idx[i] += 1;
            for j in i + 1..size {
                idx[j] = idx[j - 1] + 1;
            }
        }
    }
    Ok(())
}

/// Calls `f(chosen, rest)` for every way of splitting `free` components into
/// a chosen part and the rest, given as vertex unions.
pub(crate) fn side_assignments<T, F>(free: &[Vec<T>], mut f: F) -> Result<()>
where
    T: Copy + Ord,
    F: FnMut(BTreeSet<T>, BTreeSet<T>) -> Result<()>,
{
    assert!(free.len() < 64, "too many free components");
    for mask in 0u64..1 << free.len() {
        let mut chosen = BTreeSet::new();
        let mut rest = BTreeSet::new();
        for (i, comp) in free.iter().enumerate() {
            if mask >> i & 1 == 1 {
                chosen.extend(comp.iter().copied());
            } else {
                rest.extend(comp.iter().copied());
            }
        }
        f(chosen, rest)?;
    }
    Ok(())
}

/// How a vertex set splits across the two sides of a separation.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, serde::Serialize)]
pub struct Vote {
    /// In `A` only.
    pub a_only: usize,
    /// In the separator.
    pub both: usize,
    /// In `B` only.
    pub b_only: usize,
}

impl Vote {
    pub fn count<T, FA, FB>(xs: impl IntoIterator<Item = T>, in_a: FA, in_b: FB) -> Vote
    where
        FA: Fn(&T) -> bool,
        FB: Fn(&T) -> bool,
    {
        let mut v = Vote::default();
        for x in xs {
            match (in_a(&x), in_b(&x)) {
                (true, true) => v.both += 1,
                (true, false) => v.a_only += 1,
                (false, true) => v.b_only += 1,
                (false, false) => unreachable!("sides cover the vertex set"),
            }
        }
        v
    }

    pub fn a(&self) -> usize {
        self.a_only + self.both
    }

    pub fn b(&self) -> usize {
        self.b_only + self.both
    }

    /// Strict majority on the `B` side.
    pub fn decides_b(&self) -> bool {
        self.a() < self.b()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn collect(n: usize, max: usize) -> Vec<Vec<usize>> {
        let items: Vec<usize> = (0..n).collect();
        let mut out = Vec::new();
        subsets_up_to(&items, max, |s| {
            out.push(s.to_vec());
            Ok(())
        })
        .unwrap();
        out
    }

    #[test]
    fn subset_counts() {
        assert_eq!(collect(4, 2).len(), 1 + 4 + 6);
        assert_eq!(collect(5, 5).len(), 32);
        assert_eq!(collect(3, 0), vec![Vec::<usize>::new()]);
        assert_eq!(collect(0, 3), vec![Vec::<usize>::new()]);
        let all = collect(6, 3);
        let uniq: BTreeSet<_> = all.iter().cloned().collect();
        assert_eq!(uniq.len(), all.len());
    }

    #[test]
    fn assignments() {
        let free = vec![vec![1], vec![2, 3]];
        let mut seen = Vec::new();
        side_assignments(&free, |a, b| {
            seen.push((a, b));
            Ok(())
        })
        .unwrap();
        assert_eq!(seen.len(), 4);
        assert!(seen.iter().all(|(a, b)| a.len() + b.len() == 3 && a.is_disjoint(b)));
    }
}

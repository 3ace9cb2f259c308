//! Permutations, unshuffles and Koszul signs.
//!
//! Permutations are 1-indexed: `images[i - 1] = σ(i)`. Rearranging a word
//! `v_1 ⋯ v_n` by σ produces `v_{σ(1)} ⋯ v_{σ(n)}`.

use std::fmt;

use crate::error::{Error, Result};
use crate::graded::Parity;

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    images: Vec<usize>,
}

impl Permutation {
    pub fn identity(n: usize) -> Self {
        Permutation { images: (1..=n).collect() }
    }

    /// Builds σ from its 1-indexed image list, checking bijectivity.
    pub fn from_images(images: Vec<usize>) -> Result<Self> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &x in &images {
            if x == 0 || x > n || seen[x - 1] {
                return Err(Error::arg(format!("{images:?} is not a permutation of 1..{n}")));
            }
            seen[x - 1] = true;
        }
        Ok(Permutation { images })
    }

    /// The adjacent transposition exchanging `k` and `k + 1`.
    pub fn transposition(n: usize, k: usize) -> Self {
        assert!(k >= 1 && k < n, "transposition ({k} {}) out of range for n = {n}", k + 1);
        let mut images: Vec<usize> = (1..=n).collect();
        images.swap(k - 1, k);
        Permutation { images }
    }

    pub fn size(&self) -> usize {
        self.images.len()
    }

    /// σ(i), 1-indexed.
    pub fn image(&self, i: usize) -> usize {
        self.images[i - 1]
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    /// `(self ∘ other)(i) = self(other(i))`.
    pub fn compose(&self, other: &Permutation) -> Permutation {
        assert_eq!(self.size(), other.size());
        Permutation { images: other.images.iter().map(|&i| self.image(i)).collect() }
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0; self.size()];
        for (i, &x) in self.images.iter().enumerate() {
            inv[x - 1] = i + 1;
        }
        Permutation { images: inv }
    }

    /// Applies σ to a sequence: returns `(x_{σ(1)}, …, x_{σ(n)})`.
    pub fn rearrange<T: Clone>(&self, items: &[T]) -> Vec<T> {
        self.images.iter().map(|&i| items[i - 1].clone()).collect()
    }

    /// Every permutation of `n`, in lexicographic order of image lists.
    pub fn all(n: usize) -> Vec<Permutation> {
        let mut out = Vec::new();
        let mut current = Vec::with_capacity(n);
        let mut used = vec![false; n];
        fn rec(n: usize, current: &mut Vec<usize>, used: &mut [bool], out: &mut Vec<Permutation>) {
            if current.len() == n {
                out.push(Permutation { images: current.clone() });
                return;
            }
            for x in 1..=n {
                if !used[x - 1] {
                    used[x - 1] = true;
                    current.push(x);
                    rec(n, current, used, out);
                    current.pop();
                    used[x - 1] = false;
                }
            }
        }
        rec(n, &mut current, &mut used, &mut out);
        out
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, x) in self.images.iter().enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            write!(f, "{x}")?;
        }
        write!(f, "]")
    }
}

/// Ordinary sign (−1)^σ, returned as the parity of the inversion count.
pub fn sign_of_permutation(sigma: &Permutation) -> Parity {
    let im = sigma.images();
    let mut odd = false;
    for a in 0..im.len() {
        for b in a + 1..im.len() {
            if im[a] > im[b] {
                odd = !odd;
            }
        }
    }
    Parity::from(odd)
}

/// Koszul sign ε(σ; v_1, …, v_n), as a parity (odd means −1).
///
/// Computed by bubble-sorting the rearranged word back into the original
/// order; each adjacent swap of `u` past `w` contributes `|u||w|`.
pub fn koszul_epsilon(sigma: &Permutation, parities: &[Parity]) -> Result<Parity> {
    if sigma.size() != parities.len() {
        return Err(Error::arg(format!(
            "permutation of size {} applied to {} parities",
            sigma.size(),
            parities.len()
        )));
    }
    Ok(koszul_sign_unchecked(sigma.images(), parities))
}

/// `images` is 1-indexed. No validation.
pub(crate) fn koszul_sign_unchecked(images: &[usize], parities: &[Parity]) -> Parity {
    let mut word: Vec<usize> = images.to_vec();
    let mut odd = false;
    let n = word.len();
    for pass in 0..n {
        let mut swapped = false;
        for k in 0..n.saturating_sub(pass + 1) {
            if word[k] > word[k + 1] {
                if parities[word[k] - 1].is_odd() && parities[word[k + 1] - 1].is_odd() {
                    odd = !odd;
                }
                word.swap(k, k + 1);
                swapped = true;
            }
        }
        if !swapped {
            break;
        }
    }
    Parity::from(odd)
}

/// All unshuffles of type `(p, q)`: permutations of `p + q` with
/// σ(k) < σ(k+1) for every `k ≠ p`, in lexicographic order of image lists.
///
/// An unshuffle is determined by the increasing set `{σ(1), …, σ(p)}`.
pub fn unshuffles(p: usize, q: usize) -> Vec<Permutation> {
    let n = p + q;
    let mut out = Vec::new();
    let mut chosen = Vec::with_capacity(p);
    fn rec(start: usize, n: usize, p: usize, chosen: &mut Vec<usize>, out: &mut Vec<Permutation>) {
        if chosen.len() == p {
            let mut images = chosen.clone();
            images.extend((1..=n).filter(|x| !chosen.contains(x)));
            out.push(Permutation { images });
            return;
        }
        let remaining = p - chosen.len();
        for x in start..=n + 1 - remaining {
            chosen.push(x);
            rec(x + 1, n, p, chosen, out);
            chosen.pop();
        }
    }
    rec(1, n, p, &mut chosen, &mut out);
    out
}

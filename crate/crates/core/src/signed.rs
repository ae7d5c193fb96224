//! Signed permutations: the hyperoctahedral Weyl group of the B/C series
//! in one-line notation.
//!
//! An element is a permutation π of {-n,…,-1,1,…,n} with π(-i) = -π(i),
//! stored as the images of 1..n. Generator i < n swaps i and i+1 (and their
//! negatives); generator n negates n. Lengths are counted directly on the
//! positive roots e_i, e_i ± e_j, so this module is independent of the
//! group-table machinery and serves as a cross-check for it.

#[derive(Clone, PartialEq, Eq, Debug, Hash)]
pub struct SignedPerm {
    /// images[i-1] = π(i), values in ±1..±n.
    images: Vec<i32>,
}

impl SignedPerm {
    pub fn identity(n: usize) -> SignedPerm {
        SignedPerm {
            images: (1..=n as i32).collect(),
        }
    }

    /// Build from explicit images of 1..n; panics unless the absolute
    /// values form a permutation.
    pub fn from_images(images: Vec<i32>) -> SignedPerm {
        let n = images.len();
        let mut seen = vec![false; n + 1];
        for &v in &images {
            let a = v.unsigned_abs() as usize;
            assert!(a >= 1 && a <= n && !seen[a], "not a signed permutation");
            seen[a] = true;
        }
        SignedPerm { images }
    }

    pub fn n(&self) -> usize {
        self.images.len()
    }

    pub fn image(&self, i: usize) -> i32 {
        self.images[i - 1]
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &v)| v == i as i32 + 1)
    }

    /// Left multiplication by generator `g` (0-based): s_g · π acts on values.
    pub fn left_mul_gen(&self, g: usize) -> SignedPerm {
        let n = self.n();
        let mut images = self.images.clone();
        if g + 1 < n {
            let (a, b) = (g as i32 + 1, g as i32 + 2);
            for v in images.iter_mut() {
                if v.abs() == a {
                    *v = b * v.signum();
                } else if v.abs() == b {
                    *v = a * v.signum();
                }
            }
        } else {
            debug_assert_eq!(g + 1, n);
            for v in images.iter_mut() {
                if v.abs() == n as i32 {
                    *v = -*v;
                }
            }
        }
        SignedPerm { images }
    }

    /// Right multiplication: π · s_g acts on positions.
    pub fn right_mul_gen(&self, g: usize) -> SignedPerm {
        let n = self.n();
        let mut images = self.images.clone();
        if g + 1 < n {
            images.swap(g, g + 1);
        } else {
            images[n - 1] = -images[n - 1];
        }
        SignedPerm { images }
    }

    /// Negation of every value: left multiplication by the longest element.
    pub fn negate(&self) -> SignedPerm {
        SignedPerm {
            images: self.images.iter().map(|&v| -v).collect(),
        }
    }

    /// Number of indices in 1..n mapped to positive values.
    pub fn positive_count(&self) -> usize {
        self.images.iter().filter(|&&v| v > 0).count()
    }

    /// Coxeter length: the number of positive roots e_i, e_i ± e_j sent to
    /// negative roots. A root image is negative iff its lowest-index
    /// coordinate is negative.
    pub fn length(&self) -> usize {
        let n = self.n();
        let mut count = 0;
        for a in 1..=n {
            // e_a ↦ sign(π(a)) e_{|π(a)|}
            if self.image(a) < 0 {
                count += 1;
            }
            for b in a + 1..=n {
                let (pa, pb) = (self.image(a), self.image(b));
                // e_a - e_b ↦ sign(pa) e_{|pa|} - sign(pb) e_{|pb|}
                if root_is_negative(pa, -pb) {
                    count += 1;
                }
                // e_a + e_b
                if root_is_negative(pa, pb) {
                    count += 1;
                }
            }
        }
        count
    }

    /// Apply a word of 0-based generators as a left-to-right product,
    /// starting from the identity.
    pub fn from_word(n: usize, word: &[u8]) -> SignedPerm {
        let mut p = SignedPerm::identity(n);
        for &g in word.iter().rev() {
            p = p.left_mul_gen(g as usize);
        }
        p
    }
}

/// Sign of the coordinate vector c_x e_{|x|} + c_y e_{|y|} with c = sign:
/// negative iff the coordinate at the smaller index is negative.
fn root_is_negative(x: i32, y: i32) -> bool {
    debug_assert_ne!(x.abs(), y.abs());
    if x.abs() < y.abs() {
        x < 0
    } else {
        y < 0
    }
}

/// Bruhat comparison u ≤ w given a reduced word for w, by the greedy
/// descent-lifting pass: scan the word left to right, applying a letter to
/// the running target whenever that shortens it; u ≤ w iff the target ends
/// at the identity.
pub fn leq_by_word(u: &SignedPerm, w_word: &[u8]) -> bool {
    let mut v = u.clone();
    let mut len = v.length();
    for &a in w_word {
        if len == 0 {
            return true;
        }
        let sv = v.left_mul_gen(a as usize);
        let slen = sv.length();
        if slen < len {
            v = sv;
            len = slen;
        }
    }
    len == 0
}

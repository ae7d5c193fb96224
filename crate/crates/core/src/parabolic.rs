//! Parabolic double-coset posets W_{θ,η} = ⟨Δ∖θ⟩\W/⟨Δ∖η⟩.
//!
//! Each double coset has a unique minimal-length element; cosets are
//! indexed by these representatives sorted in the dense element order
//! (length, then smallest reduced word). The induced Bruhat order is
//! comparison of minimal representatives, and when ι(θ) = θ the longest
//! element acts on cosets by left multiplication, reversing the order.

use crate::bitset::Bitset;
use crate::bruhat::BruhatOrder;
use crate::error::{Error, Result};
use crate::rootdata::MultiplicityProfile;
use crate::util::SimpleSet;
use crate::weyl::GroupTable;
use std::sync::atomic::{AtomicU64, Ordering};
use std::sync::Arc;

static QUOTIENT_IDS: AtomicU64 = AtomicU64::new(0);

/// The poset of parabolic double cosets, with projection, induced order
/// and the (optional) longest-element action.
pub struct Quotient {
    table: Arc<GroupTable>,
    theta: SimpleSet,
    eta: SimpleSet,
    reps: Vec<u32>,
    proj: Vec<u32>,
    /// downsets[c] = cosets ≤ c; upsets[c] = cosets ≥ c.
    downsets: Vec<Bitset>,
    upsets: Vec<Bitset>,
    /// Left action of w₀ on cosets; present iff ι(θ) = θ.
    w0_action: Option<Vec<u32>>,
    id: u64,
}

impl Quotient {
    /// Build W_{θ,η}. Both θ and η must be non-empty subsets of Δ.
    pub fn new(table: Arc<GroupTable>, theta: SimpleSet, eta: SimpleSet) -> Result<Quotient> {
        let rank = table.rank();
        let full = SimpleSet::full(rank);
        if theta.is_empty() || eta.is_empty() {
            return Err(Error::InvalidArgument(
                "θ and η must be non-empty subsets of Δ".into(),
            ));
        }
        if !theta.is_subset(&full) || !eta.is_subset(&full) {
            return Err(Error::InvalidArgument(format!(
                "θ, η must be subsets of Δ (rank {rank})"
            )));
        }
        let left_gens: Vec<usize> = theta.complement(rank).iter().collect();
        let right_gens: Vec<usize> = eta.complement(rank).iter().collect();

        // Minimal representatives by iterated descent removal; processing in
        // dense index order means every shorter element is already resolved.
        let size = table.size();
        let mut proj = vec![0u32; size];
        let mut reps: Vec<u32> = Vec::new();
        for w in 0..size as u32 {
            let descent_target = left_gens
                .iter()
                .find(|&&i| table.is_left_descent(w, i))
                .map(|&i| table.left_mul(w, i))
                .or_else(|| {
                    right_gens
                        .iter()
                        .find(|&&j| table.is_right_descent(w, j))
                        .map(|&j| table.right_mul(w, j))
                });
            proj[w as usize] = match descent_target {
                Some(shorter) => {
                    debug_assert!(shorter < w);
                    proj[shorter as usize]
                }
                None => {
                    reps.push(w);
                    (reps.len() - 1) as u32
                }
            };
        }

        // Induced order via minimal representatives.
        let num = reps.len();
        let order = BruhatOrder::new(&table);
        let mut downsets: Vec<Bitset> = (0..num).map(|_| Bitset::new(num)).collect();
        let mut upsets: Vec<Bitset> = (0..num).map(|_| Bitset::new(num)).collect();
        for b in 0..num {
            for a in 0..num {
                if order.leq(reps[a], reps[b]) {
                    downsets[b].insert(a);
                    upsets[a].insert(b);
                }
            }
        }

        let w0_action = if table.apply_iota(theta) == theta {
            Some(
                reps.iter()
                    .map(|&r| proj[table.w0_left(r) as usize])
                    .collect::<Vec<u32>>(),
            )
        } else {
            None
        };

        Ok(Quotient {
            table,
            theta,
            eta,
            reps,
            proj,
            downsets,
            upsets,
            w0_action,
            id: QUOTIENT_IDS.fetch_add(1, Ordering::Relaxed),
        })
    }

    pub fn table(&self) -> &Arc<GroupTable> {
        &self.table
    }

    pub fn theta(&self) -> SimpleSet {
        self.theta
    }

    pub fn eta(&self) -> SimpleSet {
        self.eta
    }

    pub fn num_cosets(&self) -> usize {
        self.reps.len()
    }

    /// Minimal-length element of coset c.
    pub fn rep(&self, c: u32) -> u32 {
        self.reps[c as usize]
    }

    pub fn reps(&self) -> &[u32] {
        &self.reps
    }

    /// Coset of an arbitrary group element.
    pub fn project(&self, w: u32) -> u32 {
        self.proj[w as usize]
    }

    /// Induced Bruhat order: [a] ≤ [b].
    pub fn leq(&self, a: u32, b: u32) -> bool {
        self.downsets[b as usize].contains(a as usize)
    }

    /// Cosets ≤ c.
    pub fn downset(&self, c: u32) -> &Bitset {
        &self.downsets[c as usize]
    }

    /// Cosets ≥ c.
    pub fn upset(&self, c: u32) -> &Bitset {
        &self.upsets[c as usize]
    }

    /// The left action of w₀ on cosets, when defined (ι(θ) = θ).
    pub fn w0_action(&self) -> Result<&[u32]> {
        self.w0_action
            .as_deref()
            .ok_or_else(|| Error::IotaViolation(self.theta.display_one_based()))
    }

    pub fn has_w0_action(&self) -> bool {
        self.w0_action.is_some()
    }

    /// True iff some coset is fixed by the w₀-action.
    pub fn has_fixed_point(&self) -> Result<bool> {
        let action = self.w0_action()?;
        Ok(action.iter().enumerate().any(|(c, &img)| img == c as u32))
    }

    /// Weighted dimension of a coset for one-sided quotients (θ = Δ):
    /// Σ_{α ∈ Ψ_rep} weight(α).
    pub fn coset_weighted_dim(&self, c: u32, profile: &MultiplicityProfile) -> Result<u64> {
        if self.theta != SimpleSet::full(self.table.rank()) {
            return Err(Error::ThetaNotFull(self.theta.display_one_based()));
        }
        Ok(self.table.weighted_length(profile, self.reps[c as usize]))
    }

    /// True when the quotient is a total order.
    pub fn is_chain(&self) -> bool {
        let n = self.num_cosets();
        (0..n as u32).all(|a| (0..n as u32).all(|b| self.leq(a, b) || self.leq(b, a)))
    }

    /// True when θ = η = Δ, i.e. cosets are the group elements themselves.
    pub fn is_full_quotient(&self) -> bool {
        let full = SimpleSet::full(self.table.rank());
        self.theta == full && self.eta == full
    }

    pub(crate) fn id(&self) -> u64 {
        self.id
    }
}

//! Exact-arithmetic brute-force verification layer.
//!
//! Random integer systems are drawn from a cube of coefficients, systems on
//! the resultant variety are rejected, and each survivor is classified by
//! the invariant appropriate to the profile: winding index for two forms of
//! equal parity, zero parity for mixed parity, global sign for a single
//! even-degree form. The census then compares the set of observed classes
//! (topped up by constructed witnesses) with the component count predicted
//! by the closed-form tables.
//!
//! Sampling is deterministic: each draw index owns an independent generator
//! derived from `(seed, index)`, so reports are identical for any worker
//! partition of the index range.

mod form;
mod invariants;
mod poly;

use std::collections::{BTreeMap, BTreeSet};

use num_bigint::BigInt;
use rand::{RngExt, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::algebra::DegreeProfile;
use crate::closed_form;
use crate::{Error, Result};

pub use form::{
    in_resultant_variety, real_root_count, sylvester_resultant, BinaryForm, PolySystem,
};
pub use invariants::{
    parity_invariant, parity_witness, sign_invariant, sign_witness, winding_index, witness_system,
};

/// Which component-separating invariant a census uses.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum InvariantKind {
    Winding,
    Parity,
    Sign,
}

/// Result of a sampling census over one profile.
#[derive(Debug, Clone)]
pub struct ComponentReport {
    pub profile: DegreeProfile,
    pub invariant_kind: InvariantKind,
    /// Invariant value -> number of accepted samples that landed there.
    pub observed: BTreeMap<i64, u64>,
    /// Invariant value -> a system realizing it (sampled when possible,
    /// constructed otherwise).
    pub witnesses: BTreeMap<i64, PolySystem>,
    pub predicted_b0: u32,
    pub accepted_samples: u64,
    pub rejected_samples: u64,
    pub seed: u64,
}

impl ComponentReport {
    /// Every value the invariant can take on this profile.
    pub fn legal_values(&self) -> BTreeSet<i64> {
        legal_values(self.invariant_kind, &self.profile)
    }

    /// Observed classes together with witnessed ones.
    pub fn distinct_classes(&self) -> BTreeSet<i64> {
        self.observed
            .keys()
            .chain(self.witnesses.keys())
            .copied()
            .collect()
    }

    /// Re-runs the invariant on every stored witness.
    pub fn verify_witnesses(&self) -> bool {
        self.witnesses.iter().all(|(&value, sys)| {
            !in_resultant_variety(sys) && classify_sample(self.invariant_kind, sys) == Some(value)
        })
    }

    /// The census verdict: the classes seen (plus witnesses) are exactly the
    /// legal set, their number matches the predicted component count, and
    /// every witness replays.
    pub fn matches_prediction(&self) -> bool {
        let legal = self.legal_values();
        self.distinct_classes() == legal
            && legal.len() as u32 == self.predicted_b0
            && self.verify_witnesses()
    }
}

fn splitmix64(mut z: u64) -> u64 {
    z = z.wrapping_add(0x9E37_79B9_7F4A_7C15);
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

/// The `index`-th raw draw of the stream `(seed, bound)`: one generator per
/// index, so any partition of indices across workers reproduces the stream.
pub fn draw_system(profile: &DegreeProfile, seed: u64, bound: u32, index: u64) -> PolySystem {
    let mut rng = ChaCha8Rng::seed_from_u64(splitmix64(seed ^ splitmix64(index)));
    let b = i64::from(bound);
    let forms = profile
        .degrees()
        .iter()
        .map(|&d| {
            BinaryForm::new(
                (0..=d)
                    .map(|_| BigInt::from(rng.random_range(-b..=b)))
                    .collect(),
            )
        })
        .collect();
    PolySystem::new(forms)
}

/// Iterator over accepted samples of the complement.
pub struct SampleStream<'a> {
    profile: &'a DegreeProfile,
    seed: u64,
    bound: u32,
    remaining: u64,
    index: u64,
    rejected: u64,
}

impl SampleStream<'_> {
    /// Draws rejected so far (variety hits and degenerate zero forms).
    pub fn rejected(&self) -> u64 {
        self.rejected
    }
}

impl Iterator for SampleStream<'_> {
    type Item = PolySystem;

    fn next(&mut self) -> Option<PolySystem> {
        while self.remaining > 0 {
            let sys = draw_system(self.profile, self.seed, self.bound, self.index);
            self.index += 1;
            if sys.forms().iter().any(BinaryForm::is_zero) || in_resultant_variety(&sys) {
                self.rejected += 1;
                continue;
            }
            self.remaining -= 1;
            return Some(sys);
        }
        None
    }
}

/// Streams `count` systems off the resultant variety with uniform integer
/// coefficients in `[-bound, bound]`.
pub fn sample_complement(
    profile: &DegreeProfile,
    seed: u64,
    bound: u32,
    count: u64,
) -> SampleStream<'_> {
    SampleStream {
        profile,
        seed,
        bound,
        remaining: count,
        index: 0,
        rejected: 0,
    }
}

fn invariant_kind_for(profile: &DegreeProfile) -> Result<InvariantKind> {
    match profile.n() {
        1 => {
            if profile.degree(1).is_multiple_of(2) {
                Ok(InvariantKind::Sign)
            } else {
                Err(Error::EmptyComplement)
            }
        }
        2 => {
            if profile.degree(1) % 2 == profile.degree(2) % 2 {
                Ok(InvariantKind::Winding)
            } else {
                Ok(InvariantKind::Parity)
            }
        }
        n => Err(Error::UnsupportedProfileForCensus(n)),
    }
}

fn legal_values(kind: InvariantKind, profile: &DegreeProfile) -> BTreeSet<i64> {
    match kind {
        InvariantKind::Winding => {
            let d2 = i64::from(profile.degree(2));
            let mut k = -d2;
            let mut out = BTreeSet::new();
            while k <= d2 {
                out.insert(k);
                k += 2;
            }
            out
        }
        InvariantKind::Parity | InvariantKind::Sign => [0, 1].into_iter().collect(),
    }
}

/// Classifies one draw; `None` is a rejection (variety hit, zero form, or a
/// measure-zero degenerate such as an odd form with a repeated real zero).
fn classify_sample(kind: InvariantKind, sys: &PolySystem) -> Option<i64> {
    if sys.forms().iter().any(BinaryForm::is_zero) || in_resultant_variety(sys) {
        return None;
    }
    match kind {
        InvariantKind::Winding => Some(
            winding_index(sys.form(0), sys.form(1))
                .expect("equal parity and off the variety by construction"),
        ),
        InvariantKind::Parity => parity_invariant(sys).ok(),
        InvariantKind::Sign => {
            Some(sign_invariant(sys.form(0)).expect("rootless form off the variety"))
        }
    }
}

fn construct_witness(kind: InvariantKind, profile: &DegreeProfile, value: i64) -> PolySystem {
    match kind {
        InvariantKind::Winding => witness_system(profile.degree(1), profile.degree(2), value)
            .expect("witness requested for a legal value"),
        InvariantKind::Parity => parity_witness(profile.degree(1), profile.degree(2), value),
        InvariantKind::Sign => sign_witness(profile.degree(1), value),
    }
}

const DRAW_BLOCK: u64 = 128;

/// Runs the sampling census: `count` accepted samples classified by the
/// profile's invariant, observed classes topped up with constructed
/// witnesses for any class sampling missed.
///
/// Draw indices are processed in blocks fanned out across threads; the
/// outcome is a pure function of `(profile, seed, bound, count)`.
pub fn component_census(
    profile: &DegreeProfile,
    seed: u64,
    bound: u32,
    count: u64,
) -> Result<ComponentReport> {
    let kind = invariant_kind_for(profile)?;
    let predicted_b0 =
        closed_form::predicted_b0_real(profile).expect("complement known non-empty");

    let workers = std::thread::available_parallelism()
        .map(|n| n.get())
        .unwrap_or(1)
        .min(8);

    let mut outcomes: Vec<Option<i64>> = Vec::new();
    let mut classified = 0u64;
    while classified < count {
        let wave_start = outcomes.len() as u64;
        let mut wave: Vec<Vec<Option<i64>>> = Vec::with_capacity(workers);
        std::thread::scope(|scope| {
            let handles: Vec<_> = (0..workers as u64)
                .map(|w| {
                    let start = wave_start + w * DRAW_BLOCK;
                    scope.spawn(move || {
                        (start..start + DRAW_BLOCK)
                            .map(|i| classify_sample(kind, &draw_system(profile, seed, bound, i)))
                            .collect::<Vec<_>>()
                    })
                })
                .collect();
            for handle in handles {
                wave.push(handle.join().expect("census worker panicked"));
            }
        });
        for block in wave {
            classified += block.iter().filter(|o| o.is_some()).count() as u64;
            outcomes.extend(block);
        }
    }

    // first `count` accepted draws in index order, regardless of how the
    // waves were scheduled
    let mut observed: BTreeMap<i64, u64> = BTreeMap::new();
    let mut witnesses: BTreeMap<i64, PolySystem> = BTreeMap::new();
    let mut accepted = 0u64;
    let mut rejected = 0u64;
    for (index, outcome) in outcomes.iter().enumerate() {
        if accepted == count {
            break;
        }
        match outcome {
            Some(value) => {
                *observed.entry(*value).or_default() += 1;
                accepted += 1;
                witnesses
                    .entry(*value)
                    .or_insert_with(|| draw_system(profile, seed, bound, index as u64));
            }
            None => rejected += 1,
        }
    }

    for value in legal_values(kind, profile) {
        witnesses
            .entry(value)
            .or_insert_with(|| construct_witness(kind, profile, value));
    }

    Ok(ComponentReport {
        profile: profile.clone(),
        invariant_kind: kind,
        observed,
        witnesses,
        predicted_b0,
        accepted_samples: accepted,
        rejected_samples: rejected,
        seed,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn profile(raw: &[i64]) -> DegreeProfile {
        DegreeProfile::new(raw.iter().copied()).unwrap()
    }

    #[test]
    fn census_kind_selection() {
        assert_eq!(
            invariant_kind_for(&profile(&[3, 3])).unwrap(),
            InvariantKind::Winding
        );
        assert_eq!(
            invariant_kind_for(&profile(&[2, 1])).unwrap(),
            InvariantKind::Parity
        );
        assert_eq!(
            invariant_kind_for(&profile(&[4])).unwrap(),
            InvariantKind::Sign
        );
        assert_eq!(
            invariant_kind_for(&profile(&[3])).unwrap_err(),
            Error::EmptyComplement
        );
        assert_eq!(
            invariant_kind_for(&profile(&[2, 2, 2])).unwrap_err(),
            Error::UnsupportedProfileForCensus(3)
        );
    }

    #[test]
    fn sampling_is_deterministic_and_mostly_accepted() {
        let p = profile(&[3, 3]);
        let first: Vec<_> = sample_complement(&p, 42, 12, 50).collect();
        let second: Vec<_> = sample_complement(&p, 42, 12, 50).collect();
        assert_eq!(first, second);
        let mut stream = sample_complement(&p, 42, 12, 200);
        let drawn: Vec<_> = stream.by_ref().collect();
        assert_eq!(drawn.len(), 200);
        // the variety has positive codimension; integer hits are rare
        assert!(stream.rejected() < 20, "rejected {}", stream.rejected());
    }

    #[test]
    fn degenerate_draws_are_rejected() {
        let zero = BinaryForm::from_i64(&[0, 0, 0]);
        let ok = BinaryForm::from_i64(&[1, 0, 1]);
        let sys = PolySystem::new(vec![zero.clone(), zero.clone()]);
        assert_eq!(classify_sample(InvariantKind::Winding, &sys), None);
        let sys = PolySystem::new(vec![ok, zero]);
        assert_eq!(classify_sample(InvariantKind::Winding, &sys), None);
    }

    #[test]
    fn census_two_cubics() {
        let p = profile(&[3, 3]);
        let report = component_census(&p, 42, 12, 300).unwrap();
        assert_eq!(report.predicted_b0, 4);
        assert_eq!(report.invariant_kind, InvariantKind::Winding);
        assert_eq!(report.accepted_samples, 300);
        for value in report.observed.keys() {
            assert!(report.legal_values().contains(value), "illegal class {value}");
        }
        assert!(report.matches_prediction());
    }

    #[test]
    fn census_mixed_parity() {
        let p = profile(&[2, 1]);
        let report = component_census(&p, 42, 12, 300).unwrap();
        assert_eq!(report.predicted_b0, 2);
        assert_eq!(report.invariant_kind, InvariantKind::Parity);
        assert!(report.matches_prediction());
        // both parity classes actually show up in samples at this size
        assert_eq!(report.observed.len(), 2);
    }

    #[test]
    fn census_single_quartic() {
        let p = profile(&[4]);
        let report = component_census(&p, 42, 12, 200).unwrap();
        assert_eq!(report.predicted_b0, 2);
        assert_eq!(report.invariant_kind, InvariantKind::Sign);
        assert!(report.matches_prediction());
    }

    #[test]
    fn census_is_reproducible() {
        let p = profile(&[4, 2]);
        let a = component_census(&p, 7, 12, 150).unwrap();
        let b = component_census(&p, 7, 12, 150).unwrap();
        assert_eq!(a.observed, b.observed);
        assert_eq!(a.rejected_samples, b.rejected_samples);
        assert_eq!(a.witnesses, b.witnesses);
        // a different seed reshuffles the counts
        let c = component_census(&p, 8, 12, 150).unwrap();
        assert!(a.observed != c.observed || a.rejected_samples != c.rejected_samples);
    }

    #[test]
    fn census_matches_sequential_stream() {
        // the parallel census sees exactly the accepted prefix of the stream
        let p = profile(&[2, 2]);
        let report = component_census(&p, 11, 12, 120).unwrap();
        let mut counts: BTreeMap<i64, u64> = BTreeMap::new();
        for sys in sample_complement(&p, 11, 12, 120) {
            if let Some(v) = classify_sample(InvariantKind::Winding, &sys) {
                *counts.entry(v).or_default() += 1;
            }
        }
        assert_eq!(report.observed, counts);
    }
}

//! Flags as dimension sequences and the closed-form predictions built on them.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Dimensions `d_1 < … < d_t` of a flag `0 ⊊ V_1 ⊊ … ⊊ V_t`.
///
/// Only [`flag_prime`] produces the empty flag.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct Flag {
    dims: Vec<usize>,
}

impl Flag {
    pub fn new(dims: Vec<usize>) -> Result<Self> {
        if dims.is_empty() {
            return Err(Error::InvalidFlag("a flag needs at least one subspace".into()));
        }
        if dims[0] == 0 {
            return Err(Error::InvalidFlag("dimensions must be positive".into()));
        }
        if let Some(w) = dims.windows(2).find(|w| w[0] >= w[1]) {
            return Err(Error::InvalidFlag(format!(
                "dimensions must strictly increase ({} then {})",
                w[0], w[1]
            )));
        }
        Ok(Flag { dims })
    }

    pub fn empty() -> Self {
        Flag { dims: Vec::new() }
    }

    /// Single-step flag `0 ⊊ K^n`.
    pub fn full(n: usize) -> Result<Self> {
        Flag::new(vec![n])
    }

    pub fn dims(&self) -> &[usize] {
        &self.dims
    }

    pub fn len(&self) -> usize {
        self.dims.len()
    }

    pub fn is_empty(&self) -> bool {
        self.dims.is_empty()
    }

    /// `dim V`, zero for the empty flag.
    pub fn total(&self) -> usize {
        self.dims.last().copied().unwrap_or(0)
    }

    /// `d_{t-1}`, with `d_0 = 0`.
    pub fn penultimate(&self) -> usize {
        match self.dims.len() {
            0 | 1 => 0,
            t => self.dims[t - 2],
        }
    }

    /// Jumps `a_i = d_i - d_{i-1}`.
    pub fn steps(&self) -> Vec<usize> {
        let mut prev = 0;
        self.dims
            .iter()
            .map(|&d| {
                let a = d - prev;
                prev = d;
                a
            })
            .collect()
    }

    /// Block index of each coordinate `0..dim V`.
    pub fn blocks(&self) -> Vec<usize> {
        self.steps().iter().enumerate().flat_map(|(b, &a)| std::iter::repeat_n(b, a)).collect()
    }

    /// Flag with the last subspace removed.
    pub fn without_last(&self) -> Flag {
        Flag { dims: self.dims[..self.dims.len().saturating_sub(1)].to_vec() }
    }
}

impl TryFrom<Vec<usize>> for Flag {
    type Error = Error;
    fn try_from(dims: Vec<usize>) -> Result<Self> {
        if dims.is_empty() {
            return Ok(Flag::empty());
        }
        Flag::new(dims)
    }
}

impl From<Flag> for Vec<usize> {
    fn from(f: Flag) -> Vec<usize> {
        f.dims
    }
}

impl fmt::Display for Flag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.dims.iter().map(usize::to_string).collect();
        write!(f, "{}", parts.join(","))
    }
}

impl FromStr for Flag {
    type Err = Error;

    /// Comma-separated dimensions, e.g. `1,3,4`.
    fn from_str(s: &str) -> Result<Self> {
        let dims = s
            .split(',')
            .map(|p| {
                p.trim()
                    .parse::<usize>()
                    .map_err(|_| Error::InvalidFlag(format!("{p:?} is not a positive integer")))
            })
            .collect::<Result<Vec<_>>>()?;
        Flag::new(dims)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Family {
    /// Stabilizer of a flag and a generic alternating form in `gl(V)`.
    #[serde(rename = "rV")]
    RV,
    /// Stabilizer of an isotropic flag in `so(E)`.
    #[serde(rename = "pV")]
    PV,
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Family::RV => "rV",
            Family::PV => "pV",
        })
    }
}

/// Which algebra a flag parametrizes, with its ambient dimension.
///
/// For `RV`, `q = dim V`; for `PV`, `q = dim E`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Ambient {
    pub family: Family,
    pub q: usize,
}

impl Ambient {
    pub fn symplectic(f: &Flag) -> Self {
        Ambient { family: Family::RV, q: f.total() }
    }

    pub fn orthogonal(q: usize, f: &Flag) -> Result<Self> {
        if q < 3 {
            return Err(Error::InvalidParameter(format!("orthogonal ambient dimension {q} is below 3")));
        }
        check_isotropic(q, f)?;
        Ok(Ambient { family: Family::PV, q })
    }
}

pub fn check_isotropic(q: usize, f: &Flag) -> Result<()> {
    if f.total() > q / 2 {
        return Err(Error::NonIsotropicFlag { dim: f.total(), q, max: q / 2 });
    }
    Ok(())
}

/// Consecutive members of the flag with both dimensions odd.
pub fn h_count(f: &Flag) -> usize {
    f.dims().windows(2).filter(|w| w[0] % 2 == 1 && w[1] % 2 == 1).count()
}

pub fn property_p(f: &Flag) -> bool {
    h_count(f) == 0
}

/// Each jump is 2 between two odd dimensions and 1 otherwise.
///
/// The pair `(V_0, V_1)` counts, so `d_1 = 1` is required; without it the
/// single-step flag `(2)` would qualify although `sp(2)` has rank one.
pub fn condition_star(f: &Flag) -> bool {
    let mut prev = 0;
    f.dims().iter().all(|&d| {
        let jump = if prev % 2 == 1 && d % 2 == 1 { 2 } else { 1 };
        let ok = d - prev == jump;
        prev = d;
        ok
    })
}

/// Drops `V` when the family's rule asks for it.
pub fn flag_prime(f: &Flag, ambient: &Ambient) -> Flag {
    let r = f.total();
    let drop = match ambient.family {
        Family::RV => ambient.q % 2 == 1 && r == ambient.q,
        Family::PV => r % 2 == 1 && 2 * r == ambient.q,
    };
    if drop {
        f.without_last()
    } else {
        f.clone()
    }
}

fn half_steps(f: &Flag) -> usize {
    f.steps().iter().map(|a| a / 2).sum()
}

/// `S - 1` or `S + 1` according to whether `d_{t-1}` stops short of `dim V - 1`.
fn odd_top_correction(f: &Flag) -> usize {
    let s = half_steps(f);
    if f.penultimate() + 1 < f.total() {
        s - 1
    } else {
        s + 1
    }
}

pub fn predict_index_rv(f: &Flag) -> usize {
    if f.total().is_multiple_of(2) {
        half_steps(f)
    } else {
        odd_top_correction(f)
    }
}

pub fn predict_index_pv(f: &Flag, q: usize) -> Result<usize> {
    check_isotropic(q, f)?;
    let r = f.total();
    Ok(if r.is_multiple_of(2) {
        q / 2 - r + half_steps(f)
    } else if 2 * r < q {
        (q - 1) / 2 - r + half_steps(f)
    } else {
        odd_top_correction(f)
    })
}

pub fn predict_index(f: &Flag, ambient: &Ambient) -> Result<usize> {
    match ambient.family {
        Family::RV => Ok(predict_index_rv(f)),
        Family::PV => predict_index_pv(f, ambient.q),
    }
}

pub fn predict_quasi_reductive(f: &Flag, ambient: &Ambient) -> bool {
    property_p(&flag_prime(f, ambient))
}

pub fn predict_unipotent_dim(f: &Flag, ambient: &Ambient) -> usize {
    h_count(&flag_prime(f, ambient))
}

pub fn predict_rank_zero(f: &Flag, ambient: &Ambient) -> bool {
    if !condition_star(f) {
        return false;
    }
    let r = f.total();
    match ambient.family {
        Family::RV => r.is_multiple_of(2) || f.penultimate() % 2 == 1,
        Family::PV => ambient.q == 2 * r || ambient.q == 2 * r + 1 || (r % 2 == 1 && ambient.q == 2 * r + 2),
    }
}

/// All flags ending at `n`: `2^(n-1)` of them, by length then lexicographically.
pub fn enumerate_flags(n: usize) -> Vec<Flag> {
    assert!(n >= 1, "flags end at a positive dimension");
    let inner = n - 1;
    let mut out = Vec::with_capacity(1 << inner);
    for size in 0..=inner {
        let mut combo: Vec<usize> = (1..=size).collect();
        loop {
            let mut dims = combo.clone();
            dims.push(n);
            out.push(Flag { dims });
            // Next combination of `size` elements from 1..=inner in lex order.
            let Some(pos) = (0..size).rev().find(|&i| combo[i] < inner - (size - 1 - i)) else {
                break;
            };
            combo[pos] += 1;
            for i in pos + 1..size {
                combo[i] = combo[i - 1] + 1;
            }
        }
    }
    out
}

/// Flags of isotropic subspaces for the split form on `K^q`: `d_t ≤ ⌊q/2⌋`.
pub fn enumerate_isotropic_flags(q: usize) -> Vec<Flag> {
    (1..=q / 2).flat_map(enumerate_flags).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn f(d: &[usize]) -> Flag {
        Flag::new(d.to_vec()).unwrap()
    }

    #[test]
    fn parsing() {
        assert_eq!("1,3,4".parse::<Flag>().unwrap(), f(&[1, 3, 4]));
        assert_eq!(" 2, 5 ".parse::<Flag>().unwrap(), f(&[2, 5]));
        assert!("3,2".parse::<Flag>().is_err());
        assert!("0,2".parse::<Flag>().is_err());
        assert!("".parse::<Flag>().is_err());
        assert!("1,x".parse::<Flag>().is_err());
        assert_eq!(f(&[1, 3, 4]).to_string(), "1,3,4");
    }

    #[test]
    fn h_and_property_p() {
        assert_eq!(h_count(&f(&[2, 4, 6])), 0);
        assert_eq!(h_count(&f(&[1, 3, 4])), 1);
        assert_eq!(h_count(&f(&[1, 3, 5, 7])), 3);
        assert!(property_p(&f(&[2, 4])));
        assert!(!property_p(&f(&[1, 3, 4])));
        assert!(property_p(&f(&[1, 2, 4])));
        assert_eq!(h_count(&Flag::empty()), 0);
        assert!(property_p(&Flag::empty()));
    }

    #[test]
    fn star_condition() {
        assert!(condition_star(&f(&[1, 3, 4])));
        assert!(condition_star(&f(&[1, 2, 3])));
        assert!(!condition_star(&f(&[1, 4])));
        assert!(!condition_star(&f(&[2])));
        assert!(condition_star(&f(&[1])));
    }

    #[test]
    fn primes() {
        let pv8 = Ambient::orthogonal(8, &f(&[1, 3, 4])).unwrap();
        assert_eq!(flag_prime(&f(&[1, 3, 4]), &pv8), f(&[1, 3, 4]));
        let pv6 = Ambient::orthogonal(6, &f(&[3])).unwrap();
        assert_eq!(flag_prime(&f(&[3]), &pv6), Flag::empty());
        let rv = Ambient::symplectic(&f(&[1, 3, 5, 7]));
        assert_eq!(flag_prime(&f(&[1, 3, 5, 7]), &rv), f(&[1, 3, 5]));
    }

    #[test]
    fn index_predictions() {
        assert_eq!(predict_index_rv(&f(&[1, 3, 4])), 1);
        assert_eq!(predict_index_rv(&f(&[2])), 1);
        assert_eq!(predict_index_rv(&f(&[1, 2, 3])), 1);
        assert_eq!(predict_index_pv(&f(&[1, 3, 4]), 8).unwrap(), 1);
        assert_eq!(predict_index_pv(&f(&[1, 3]), 7).unwrap(), 1);
        assert_eq!(predict_index_pv(&f(&[4]), 9).unwrap(), 2);
        assert!(matches!(predict_index_pv(&f(&[4]), 7), Err(Error::NonIsotropicFlag { .. })));
    }

    #[test]
    fn structural_predictions() {
        let pv8 = Ambient::orthogonal(8, &f(&[1, 3, 4])).unwrap();
        assert!(!predict_quasi_reductive(&f(&[1, 3, 4]), &pv8));
        assert!(predict_quasi_reductive(&f(&[2, 4]), &pv8));
        let rv = Ambient::symplectic(&f(&[1, 3, 4]));
        assert!(!predict_quasi_reductive(&f(&[1, 3, 4]), &rv));
        assert_eq!(predict_unipotent_dim(&f(&[1, 3, 4]), &pv8), 1);
        let pv7 = Ambient::orthogonal(7, &f(&[1, 3])).unwrap();
        assert_eq!(predict_unipotent_dim(&f(&[1, 3]), &pv7), 1);
        assert_eq!(predict_unipotent_dim(&f(&[2, 4]), &pv8), 0);
        assert!(predict_rank_zero(&f(&[1, 3, 4]), &rv));
        assert!(predict_rank_zero(&f(&[1, 3, 4]), &pv8));
        let pv12 = Ambient::orthogonal(12, &f(&[1, 3, 4])).unwrap();
        assert!(!predict_rank_zero(&f(&[1, 3, 4]), &pv12));
    }

    #[test]
    fn orthogonal_spec_validation() {
        assert!(Ambient::orthogonal(2, &f(&[1])).is_err());
        assert!(Ambient::orthogonal(7, &f(&[4])).is_err());
    }

    #[test]
    fn enumeration() {
        assert_eq!(enumerate_flags(1), vec![f(&[1])]);
        assert_eq!(enumerate_flags(2), vec![f(&[2]), f(&[1, 2])]);
        assert_eq!(enumerate_flags(3), vec![f(&[3]), f(&[1, 3]), f(&[2, 3]), f(&[1, 2, 3])]);
        assert_eq!(enumerate_isotropic_flags(3), vec![f(&[1])]);
        let four = vec![f(&[1]), f(&[2]), f(&[1, 2])];
        assert_eq!(enumerate_isotropic_flags(4), four);
        assert_eq!(enumerate_isotropic_flags(5), four);
        for n in 1..=9 {
            let all = enumerate_flags(n);
            assert_eq!(all.len(), 1 << (n - 1));
            let mut sorted = all.clone();
            sorted.sort();
            sorted.dedup();
            assert_eq!(sorted.len(), all.len());
        }
    }

    fn any_flag() -> impl Strategy<Value = Flag> {
        (1usize..10).prop_flat_map(|n| {
            proptest::collection::vec(any::<bool>(), n - 1).prop_map(move |keep| {
                let mut dims: Vec<usize> = (1..n).filter(|&i| keep[i - 1]).collect();
                dims.push(n);
                Flag::new(dims).unwrap()
            })
        })
    }

    proptest! {
        #![proptest_config(crate::testutil::fixed_config(256))]

        #[test]
        fn prime_is_idempotent(fl in any_flag()) {
            let rv = Ambient::symplectic(&fl);
            let once = flag_prime(&fl, &rv);
            prop_assert_eq!(flag_prime(&once, &rv), once.clone());
            for q in (2 * fl.total()).max(3)..=2 * fl.total() + 3 {
                let pv = Ambient::orthogonal(q, &fl).unwrap();
                let once = flag_prime(&fl, &pv);
                prop_assert_eq!(flag_prime(&once, &pv), once.clone());
            }
        }

        #[test]
        fn property_p_matches_direct_scan(fl in any_flag()) {
            let d = fl.dims();
            let direct = (1..d.len()).all(|i| d[i - 1] % 2 == 0 || d[i] % 2 == 0);
            prop_assert_eq!(property_p(&fl), direct);
        }

        #[test]
        fn star_forces_short_gaps(fl in any_flag()) {
            if condition_star(&fl) {
                let mut prev = 0;
                for &d in fl.dims() {
                    let gap = d - prev;
                    prop_assert!(gap == 1 || gap == 2);
                    if gap == 2 {
                        prop_assert!(prev % 2 == 1 && d % 2 == 1);
                    }
                    prev = d;
                }
            }
        }
    }
}

//! Index parametrizations, eigenvalue formulas and the K-type action data.
//!
//! A spherical function class of type (n, ell) is labeled by two free integer
//! parameters (w, k). This module houses:
//!
//! - [`SFIndex`]: the admissible quadruple (n, ell, w, k),
//! - [`RestrictionParams`]: the equivalent branching data (p, q, k1, k2),
//! - the bijection between the two and the eigenvalue maps on both sides,
//! - [`ReprAction`]: the matrices of the K-type representation on the weight
//!   basis v_0..v_ell, and the two K-Casimir scalars evaluated through it.
//!
//! Eigenvalue convention: `(lambda, mu)` always means the scaled t-variable
//! eigenvalues of the operators D and E. The unscaled radial eigenvalues are
//! `4 lambda` and `4 mu`; conversions to the group-level Casimir scalars
//! are provided by [`casimir_from_eigen`].

use crate::error::{Error, Result};
use crate::matrix::QMatrix;
use crate::rat::{frac, rat, Rat};
use num::Zero;

/// Admissible spherical-function index: `0 <= k <= ell`, `0 <= w`,
/// `0 <= w + n + k`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct SFIndex {
    n: i64,
    ell: i64,
    w: i64,
    k: i64,
}

impl SFIndex {
    pub fn new(n: i64, ell: i64, w: i64, k: i64) -> Result<Self> {
        let reject = |reason: &str| Error::InvalidIndex {
            n,
            ell,
            w,
            k,
            reason: reason.to_string(),
        };
        if ell < 0 {
            return Err(reject("ell must be nonnegative"));
        }
        if !(0 <= k && k <= ell) {
            return Err(reject("k must satisfy 0 <= k <= ell"));
        }
        if w < 0 {
            return Err(reject("w must be nonnegative"));
        }
        if w + n + k < 0 {
            return Err(reject("w + n + k must be nonnegative"));
        }
        Ok(SFIndex { n, ell, w, k })
    }

    pub fn n(&self) -> i64 {
        self.n
    }

    pub fn ell(&self) -> i64 {
        self.ell
    }

    pub fn w(&self) -> i64 {
        self.w
    }

    pub fn k(&self) -> i64 {
        self.k
    }

    /// The other root of the quadratic relating w to lambda. Exchanging
    /// `w <-> mirror_w` leaves every eigenvalue and solution unchanged; for
    /// admissible indices the mirror is always negative, so the stored `w`
    /// is already the canonical representative.
    pub fn mirror_w(&self) -> i64 {
        -(self.w + self.n + self.k + self.ell + 2)
    }
}

/// Branching data for a G-representation with highest weight p, q restricted
/// to the K-type chain: `p + q >= k1 >= q >= k2 >= 0`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct RestrictionParams {
    p: i64,
    q: i64,
    k1: i64,
    k2: i64,
}

impl RestrictionParams {
    pub fn new(p: i64, q: i64, k1: i64, k2: i64) -> Result<Self> {
        if p + q >= k1 && k1 >= q && q >= k2 && k2 >= 0 {
            Ok(RestrictionParams { p, q, k1, k2 })
        } else {
            Err(Error::ChainViolation { p, q, k1, k2 })
        }
    }

    pub fn p(&self) -> i64 {
        self.p
    }

    pub fn q(&self) -> i64 {
        self.q
    }

    pub fn k1(&self) -> i64 {
        self.k1
    }

    pub fn k2(&self) -> i64 {
        self.k2
    }
}

/// Scaled eigenvalue pair of the t-variable operators D and E.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EigenPair {
    pub lambda: Rat,
    pub mu: Rat,
}

/// (n, ell, w, k) -> (p, q, k1, k2).
pub fn index_to_restriction(idx: &SFIndex) -> RestrictionParams {
    let (n, ell, w, k) = (idx.n, idx.ell, idx.w, idx.k);
    RestrictionParams::new(w + ell - k, w + n + 2 * k, w + n + ell + k, w + n + k)
        .expect("admissible index maps into the branching chain")
}

/// (p, q, k1, k2) -> (n, ell, w, k), inverse of [`index_to_restriction`].
pub fn restriction_to_index(rp: &RestrictionParams) -> SFIndex {
    let n = rp.k1 + 2 * rp.k2 - rp.p - 2 * rp.q;
    let ell = rp.k1 - rp.k2;
    let k = rp.q - rp.k2;
    let w = rp.p + rp.q - rp.k1;
    SFIndex::new(n, ell, w, k).expect("chain data maps onto an admissible index")
}

/// Casimir eigenvalues (lambda_tilde, mu_tilde) of the G-representation with
/// highest weight `p lambda_1 + q lambda_2`.
pub fn casimir_eigenvalues(p: i64, q: i64) -> (Rat, Rat) {
    assert!(p >= 0 && q >= 0, "highest weight labels must be nonnegative");
    let (p, q) = (rat(p), rat(q));
    let lambda_tilde = frac(-4, 3) * (&p * &p + &q * &q + &p * &q + rat(3) * (&p + &q));
    let mu_tilde = rat(4)
        * (frac(2, 9) * (&p * &p * &p - &q * &q * &q)
            + frac(1, 3) * &p * &q * (&p - &q)
            + rat(2) * &p * &p
            + &p * &q
            + rat(4) * &p
            + rat(2) * &q);
    (lambda_tilde, mu_tilde)
}

/// Scaled (lambda, mu) of an admissible index.
pub fn eigen_from_index(idx: &SFIndex) -> EigenPair {
    let (n, ell, w, k) = (idx.n, idx.ell, idx.w, idx.k);
    let lambda = rat(-w * (w + n + ell + k + 2) - k * (n + k + 1));
    let mu = mu_of_lambda(n, ell, k, &lambda);
    EigenPair { lambda, mu }
}

/// `mu_k(lambda) = lambda (n - ell + 3k) - 3k (ell - k + 1)(n + k + 1)`.
pub fn mu_of_lambda(n: i64, ell: i64, k: i64, lambda: &Rat) -> Rat {
    lambda * rat(n - ell + 3 * k) - rat(3 * k * (ell - k + 1) * (n + k + 1))
}

/// Converts scaled (lambda, mu) back to the Casimir scalars of the ambient
/// representation: `lambda_tilde = 4 lambda + d2k`,
/// `mu_tilde = 4 mu - 12 lambda + d3k`.
pub fn casimir_from_eigen(n: i64, ell: i64, pair: &EigenPair) -> Result<(Rat, Rat)> {
    let (d2k, d3k) = kcasimir_scalars(n, ell)?;
    let lambda_tilde = rat(4) * &pair.lambda + d2k;
    let mu_tilde = rat(4) * &pair.mu - rat(12) * &pair.lambda + d3k;
    Ok((lambda_tilde, mu_tilde))
}

/// Matrices of the K-type representation (det)^n (sym)^ell on the basis
/// v_0..v_ell, plus the derived combinations entering the radial operators.
#[derive(Clone, Debug)]
pub struct ReprAction {
    n: i64,
    ell: i64,
    h_alpha: QMatrix,
    x_alpha: QMatrix,
    x_minus_alpha: QMatrix,
    z_scalar: Rat,
}

impl ReprAction {
    pub fn n(&self) -> i64 {
        self.n
    }

    pub fn ell(&self) -> i64 {
        self.ell
    }

    pub fn dim(&self) -> usize {
        (self.ell + 1) as usize
    }

    pub fn h_alpha(&self) -> &QMatrix {
        &self.h_alpha
    }

    pub fn x_alpha(&self) -> &QMatrix {
        &self.x_alpha
    }

    pub fn x_minus_alpha(&self) -> &QMatrix {
        &self.x_minus_alpha
    }

    /// Scalar by which the center acts: 2n + ell.
    pub fn z_scalar(&self) -> &Rat {
        &self.z_scalar
    }

    fn z_matrix(&self) -> QMatrix {
        QMatrix::identity(self.dim()).scale(&self.z_scalar)
    }

    /// H_beta = (Z - H_alpha)/2; acts on v_i by n + i.
    pub fn h_beta(&self) -> QMatrix {
        self.z_matrix().sub(&self.h_alpha).scale(&frac(1, 2))
    }

    /// H_gamma = (Z + H_alpha)/2; acts on v_i by n + ell - i.
    pub fn h_gamma(&self) -> QMatrix {
        self.z_matrix().add(&self.h_alpha).scale(&frac(1, 2))
    }

    /// H~_1 = (Z + 3 H_alpha)/2.
    pub fn h_tilde_1(&self) -> QMatrix {
        self.z_matrix()
            .add(&self.h_alpha.scale(&rat(3)))
            .scale(&frac(1, 2))
    }

    /// H~_2 = (Z - 3 H_alpha)/2.
    pub fn h_tilde_2(&self) -> QMatrix {
        self.z_matrix()
            .sub(&self.h_alpha.scale(&rat(3)))
            .scale(&frac(1, 2))
    }

    /// J = X_alpha - X_{-alpha}.
    pub fn j_matrix(&self) -> QMatrix {
        self.x_alpha.sub(&self.x_minus_alpha)
    }

    /// T = X_alpha + X_{-alpha}.
    pub fn t_matrix(&self) -> QMatrix {
        self.x_alpha.add(&self.x_minus_alpha)
    }
}

/// Builds the action data for the K-type (n, ell):
/// `H_alpha v_i = (ell - 2i) v_i`, `X_alpha v_i = (ell - i + 1) v_{i-1}`,
/// `X_{-alpha} v_i = (i + 1) v_{i+1}`, `Z v_i = (2n + ell) v_i`.
pub fn make_repr_action(n: i64, ell: i64) -> Result<ReprAction> {
    if ell < 0 {
        return Err(Error::InvalidArgument(format!(
            "ell must be nonnegative, got {ell}"
        )));
    }
    let dim = (ell + 1) as usize;
    let mut h_alpha = QMatrix::zeros(dim, dim);
    let mut x_alpha = QMatrix::zeros(dim, dim);
    let mut x_minus_alpha = QMatrix::zeros(dim, dim);
    for i in 0..dim {
        let ii = i as i64;
        h_alpha[(i, i)] = rat(ell - 2 * ii);
        if i >= 1 {
            x_alpha[(i - 1, i)] = rat(ell - ii + 1);
        }
        if i + 1 < dim {
            x_minus_alpha[(i + 1, i)] = rat(ii + 1);
        }
    }
    Ok(ReprAction {
        n,
        ell,
        h_alpha,
        x_alpha,
        x_minus_alpha,
        z_scalar: rat(2 * n + ell),
    })
}

/// Evaluates the two K-Casimir elements through the representation and
/// returns the scalars by which they act. Errors if the evaluation is not
/// scalar, which would mean the action matrices are wrong.
pub fn kcasimir_scalars(n: i64, ell: i64) -> Result<(Rat, Rat)> {
    let ra = make_repr_action(n, ell)?;
    let dim = ra.dim();
    let h_a = ra.h_alpha().clone();
    let h_b = ra.h_beta();
    let z = QMatrix::identity(dim).scale(ra.z_scalar());
    let lowering_raising = ra.x_minus_alpha().mul(ra.x_alpha());

    let d2 = h_a
        .mul(&h_a)
        .scale(&rat(-1))
        .sub(&z.mul(&z).scale(&frac(1, 3)))
        .sub(&h_a.scale(&rat(2)))
        .sub(&z.scale(&rat(2)))
        .sub(&lowering_raising.scale(&rat(4)));

    let h_a2 = h_a.mul(&h_a);
    let h_b2 = h_b.mul(&h_b);
    let d3 = h_a2
        .mul(&h_a)
        .scale(&frac(8, 9))
        .sub(&h_b2.mul(&h_b).scale(&frac(8, 9)))
        .add(&h_a2.mul(&h_b).scale(&frac(4, 3)))
        .sub(&h_a.mul(&h_b2).scale(&frac(4, 3)))
        .add(&h_a2.scale(&rat(8)))
        .add(&h_a.mul(&h_b).scale(&rat(4)))
        .add(&h_a.scale(&rat(16)))
        .add(&h_b.scale(&rat(8)))
        .add(&lowering_raising.mul(&h_a).scale(&rat(4)))
        .add(&lowering_raising.mul(&h_b).scale(&rat(8)))
        .add(&lowering_raising.scale(&rat(24)));

    Ok((scalar_of(&d2)?, scalar_of(&d3)?))
}

fn scalar_of(m: &QMatrix) -> Result<Rat> {
    let dim = m.rows();
    let value = m[(0, 0)].clone();
    for i in 0..dim {
        for j in 0..dim {
            let expected = if i == j { value.clone() } else { Rat::zero() };
            if m[(i, j)] != expected {
                return Err(Error::Internal(
                    "K-Casimir evaluation is not a scalar matrix".to_string(),
                ));
            }
        }
    }
    Ok(value)
}

/// Enumerates the admissible (w, k) for fixed (n, ell) with `w <= w_max`.
pub fn admissible_indices(n: i64, ell: i64, w_max: i64) -> Vec<SFIndex> {
    let mut out = Vec::new();
    for w in 0..=w_max {
        for k in 0..=ell {
            if let Ok(idx) = SFIndex::new(n, ell, w, k) {
                out.push(idx);
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn index_validation() {
        assert!(SFIndex::new(0, 2, 1, 1).is_ok());
        assert!(SFIndex::new(0, -1, 0, 0).is_err());
        assert!(SFIndex::new(0, 2, -1, 0).is_err());
        assert!(SFIndex::new(0, 2, 0, 3).is_err());
        // w + n + k < 0
        assert!(SFIndex::new(-3, 2, 1, 1).is_err());
        assert!(SFIndex::new(-3, 2, 2, 1).is_ok());
    }

    #[test]
    fn restriction_examples() {
        let rp = index_to_restriction(&SFIndex::new(0, 0, 0, 0).unwrap());
        assert_eq!((rp.p(), rp.q(), rp.k1(), rp.k2()), (0, 0, 0, 0));

        let rp = index_to_restriction(&SFIndex::new(0, 1, 0, 0).unwrap());
        assert_eq!((rp.p(), rp.q(), rp.k1(), rp.k2()), (1, 0, 1, 0));

        let rp = index_to_restriction(&SFIndex::new(-1, 2, 1, 1).unwrap());
        assert_eq!((rp.p(), rp.q(), rp.k1(), rp.k2()), (2, 2, 3, 1));

        let idx = restriction_to_index(&RestrictionParams::new(1, 0, 1, 0).unwrap());
        assert_eq!((idx.n(), idx.ell(), idx.w(), idx.k()), (0, 1, 0, 0));
    }

    #[test]
    fn casimir_values() {
        assert_eq!(casimir_eigenvalues(0, 0), (rat(0), rat(0)));
        assert_eq!(casimir_eigenvalues(1, 0), (frac(-16, 3), frac(224, 9)));
        // lambda_tilde is symmetric in (p, q)
        for (p, q) in [(1, 2), (3, 5), (0, 4)] {
            assert_eq!(casimir_eigenvalues(p, q).0, casimir_eigenvalues(q, p).0);
        }
    }

    #[test]
    fn eigen_examples() {
        let e = eigen_from_index(&SFIndex::new(0, 1, 0, 0).unwrap());
        assert_eq!((e.lambda, e.mu), (rat(0), rat(0)));

        let e = eigen_from_index(&SFIndex::new(0, 0, 1, 0).unwrap());
        assert_eq!((e.lambda, e.mu), (rat(-3), rat(0)));

        // lambda = -k(n+k+1) = -2, mu = lambda(n-ell+3k) - 3k(ell-k+1)(n+k+1)
        let e = eigen_from_index(&SFIndex::new(0, 1, 0, 1).unwrap());
        assert_eq!((e.lambda, e.mu), (rat(-2), rat(-10)));
    }

    #[test]
    fn kcasimir_values() {
        assert_eq!(kcasimir_scalars(0, 0).unwrap(), (rat(0), rat(0)));
        assert_eq!(kcasimir_scalars(0, 1).unwrap(), (frac(-16, 3), frac(224, 9)));
        // the scalars coincide with the Casimir eigenvalues at (p, q) = (ell, n)
        for (n, ell) in [(0i64, 3i64), (2, 1), (1, 4)] {
            let (d2, d3) = kcasimir_scalars(n, ell).unwrap();
            let (lt, mt) = casimir_eigenvalues(ell, n);
            assert_eq!(d2, lt);
            assert_eq!(d3, mt);
        }
    }

    #[test]
    fn sl2_commutation() {
        for (n, ell) in [(0, 0), (0, 1), (2, 3), (-2, 4)] {
            let ra = make_repr_action(n, ell).unwrap();
            let comm = ra
                .x_alpha()
                .mul(ra.x_minus_alpha())
                .sub(&ra.x_minus_alpha().mul(ra.x_alpha()));
            assert_eq!(&comm, ra.h_alpha(), "sl2 identity fails at ({n},{ell})");
        }
    }

    #[test]
    fn action_matrices_for_ell_one() {
        let ra = make_repr_action(0, 1).unwrap();
        assert_eq!(ra.h_alpha()[(0, 0)], rat(1));
        assert_eq!(ra.h_alpha()[(1, 1)], rat(-1));
        assert_eq!(ra.x_alpha()[(0, 1)], rat(1));
        assert_eq!(ra.x_alpha()[(1, 0)], rat(0));
        assert_eq!(*ra.z_scalar(), rat(1));

        let ra = make_repr_action(0, 0).unwrap();
        assert!(ra.h_alpha().is_zero());
        assert!(ra.x_alpha().is_zero());
        assert_eq!(*ra.z_scalar(), rat(0));
    }

    #[test]
    fn mirror_w_is_never_admissible() {
        for idx in admissible_indices(-2, 3, 4) {
            assert!(idx.mirror_w() < 0);
            let e = eigen_from_index(&idx);
            // lambda is invariant under the w exchange
            let m = idx.mirror_w();
            let lambda_mirror =
                rat(-m * (m + idx.n() + idx.ell() + idx.k() + 2) - idx.k() * (idx.n() + idx.k() + 1));
            assert_eq!(e.lambda, lambda_mirror);
        }
    }

    proptest! {
        #[test]
        fn restriction_round_trip(p in 0i64..=6, q in 0i64..=6, k1 in 0i64..=6, k2 in 0i64..=6) {
            if let Ok(rp) = RestrictionParams::new(p, q, k1, k2) {
                let idx = restriction_to_index(&rp);
                let back = index_to_restriction(&idx);
                prop_assert_eq!(rp, back);
            }
        }

        #[test]
        fn index_round_trip(n in -6i64..=6, ell in 0i64..=5, w in 0i64..=6, k in 0i64..=5) {
            if let Ok(idx) = SFIndex::new(n, ell, w, k) {
                let rp = index_to_restriction(&idx);
                let back = restriction_to_index(&rp);
                prop_assert_eq!(idx, back);
            }
        }

        #[test]
        fn spectral_chain(n in -4i64..=4, ell in 0i64..=4, w in 0i64..=5, k in 0i64..=4) {
            if let Ok(idx) = SFIndex::new(n, ell, w, k) {
                let rp = index_to_restriction(&idx);
                let (lt, mt) = casimir_eigenvalues(rp.p(), rp.q());
                let pair = eigen_from_index(&idx);
                let (lt2, mt2) = casimir_from_eigen(n, ell, &pair).unwrap();
                prop_assert_eq!(lt, lt2);
                prop_assert_eq!(mt, mt2);
            }
        }
    }
}

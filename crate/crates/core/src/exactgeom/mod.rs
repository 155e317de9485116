//! Exact integer and rational linear algebra.
//!
//! Everything here is arbitrary precision; no floating point is used to
//! decide incidences or half-space signs.

pub mod feasibility;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};
use std::cmp::Ordering;
use std::fmt;
use thiserror::Error;

pub use feasibility::{LinearSystem, Method};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GeomError {
    #[error("input vectors are linearly dependent")]
    DependentInput,
    #[error("expected {expected} vectors of dimension {dim}, got {got}")]
    WrongCount {
        expected: usize,
        dim: usize,
        got: usize,
    },
    #[error("vector has dimension {got}, expected {expected}")]
    DimensionMismatch { expected: usize, got: usize },
}

/// Sign of an exact quantity.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Sign {
    Negative,
    Zero,
    Positive,
}

impl Sign {
    pub fn of<T: Signed + Zero>(x: &T) -> Sign {
        if x.is_zero() {
            Sign::Zero
        } else if x.is_positive() {
            Sign::Positive
        } else {
            Sign::Negative
        }
    }

    pub fn as_i8(self) -> i8 {
        match self {
            Sign::Negative => -1,
            Sign::Zero => 0,
            Sign::Positive => 1,
        }
    }
}

/// Integer vector. Used for rays, hyperplane normals and barycenters.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct IntVec(Vec<BigInt>);

impl IntVec {
    pub fn new(coords: Vec<BigInt>) -> Self {
        IntVec(coords)
    }

    pub fn from_i64s(coords: &[i64]) -> Self {
        IntVec(coords.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn zero(dim: usize) -> Self {
        IntVec(vec![BigInt::zero(); dim])
    }

    pub fn unit(dim: usize, i: usize) -> Self {
        let mut v = IntVec::zero(dim);
        v.0[i] = BigInt::one();
        v
    }

    pub fn all_ones(dim: usize) -> Self {
        IntVec(vec![BigInt::one(); dim])
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    pub fn coords(&self) -> &[BigInt] {
        &self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(Zero::is_zero)
    }

    /// Gcd of the absolute values of the coordinates (zero for the zero vector).
    pub fn content(&self) -> BigInt {
        self.0.iter().fold(BigInt::zero(), |g, c| g.gcd(c))
    }

    pub fn is_primitive(&self) -> bool {
        self.content().is_one()
    }

    pub fn dot(&self, other: &IntVec) -> BigInt {
        self.0.iter().zip(&other.0).map(|(a, b)| a * b).sum()
    }

    pub fn add(&self, other: &IntVec) -> IntVec {
        IntVec(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub fn neg(&self) -> IntVec {
        IntVec(self.0.iter().map(|a| -a).collect())
    }

    /// Divides by the content; the zero vector is returned unchanged.
    pub fn primitive_part(&self) -> IntVec {
        let g = self.content();
        if g.is_zero() {
            return self.clone();
        }
        IntVec(self.0.iter().map(|c| c / &g).collect())
    }

    /// `true` if `other = λ·self` for some rational `λ > 0`.
    pub fn positively_proportional(&self, other: &IntVec) -> bool {
        if self.is_zero() || other.is_zero() {
            return false;
        }
        self.primitive_part() == other.primitive_part()
    }

    pub fn to_i64s(&self) -> Option<Vec<i64>> {
        self.0.iter().map(|c| c.to_i64()).collect()
    }

    pub fn to_rational(&self) -> RatVec {
        RatVec(
            self.0
                .iter()
                .map(|c| BigRational::from_integer(c.clone()))
                .collect(),
        )
    }
}

impl fmt::Display for IntVec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, c) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}

/// Rational vector. `BigRational` keeps every coordinate reduced with a
/// positive denominator.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RatVec(Vec<BigRational>);

impl RatVec {
    pub fn new(coords: Vec<BigRational>) -> Self {
        RatVec(coords)
    }

    pub fn from_i64s(coords: &[i64]) -> Self {
        IntVec::from_i64s(coords).to_rational()
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    pub fn coords(&self) -> &[BigRational] {
        &self.0
    }

    pub fn dot_int(&self, v: &IntVec) -> BigRational {
        self.0
            .iter()
            .zip(v.coords())
            .map(|(a, b)| a * BigRational::from_integer(b.clone()))
            .sum()
    }
}

/// A linear hyperplane given by a primitive normal with the canonical sign:
/// the open positive side contains the all-ones vector. When the all-ones
/// vector lies on the hyperplane the first nonzero coordinate is made
/// positive and the hyperplane is flagged `ambiguous`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Hyperplane {
    normal: IntVec,
    ambiguous: bool,
}

impl Hyperplane {
    /// Canonicalizes a nonzero normal vector.
    pub fn from_normal(normal: &IntVec) -> Hyperplane {
        assert!(!normal.is_zero(), "hyperplane normal must be nonzero");
        let mut nu = normal.primitive_part();
        let ones: BigInt = nu.coords().iter().sum();
        let ambiguous = ones.is_zero();
        let flip = if ambiguous {
            nu.coords()
                .iter()
                .find(|c| !c.is_zero())
                .is_some_and(|c| c.is_negative())
        } else {
            ones.is_negative()
        };
        if flip {
            nu = nu.neg();
        }
        Hyperplane {
            normal: nu,
            ambiguous,
        }
    }

    /// The hyperplane spanned by `dim - 1` independent vectors.
    pub fn spanned_by(dim: usize, vectors: &[IntVec]) -> Result<Hyperplane, GeomError> {
        let raw = orthogonal_complement_generator(dim, vectors)?;
        Ok(Hyperplane::from_normal(&raw))
    }

    pub fn normal(&self) -> &IntVec {
        &self.normal
    }

    pub fn is_ambiguous(&self) -> bool {
        self.ambiguous
    }

    pub fn side(&self, v: &IntVec) -> Sign {
        Sign::of(&self.normal.dot(v))
    }

    pub fn contains(&self, v: &IntVec) -> bool {
        self.side(v) == Sign::Zero
    }
}

impl PartialOrd for Hyperplane {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Hyperplane {
    fn cmp(&self, other: &Self) -> Ordering {
        self.normal
            .cmp(&other.normal)
            .then(self.ambiguous.cmp(&other.ambiguous))
    }
}

/// Exact determinant of a square integer matrix (rows given as slices),
/// by fraction-free Bareiss elimination.
pub fn determinant(rows: &[IntVec]) -> BigInt {
    let n = rows.len();
    if n == 0 {
        return BigInt::one();
    }
    let mut m: Vec<Vec<BigInt>> = rows.iter().map(|r| r.coords().to_vec()).collect();
    let mut sign = BigInt::one();
    let mut prev = BigInt::one();
    for k in 0..n {
        if m[k][k].is_zero() {
            let Some(p) = (k + 1..n).find(|&i| !m[i][k].is_zero()) else {
                return BigInt::zero();
            };
            m.swap(k, p);
            sign = -sign;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = (&m[i][j] * &m[k][k] - &m[i][k] * &m[k][j]) / &prev;
                m[i][j] = v;
            }
        }
        prev = m[k][k].clone();
    }
    sign * &m[n - 1][n - 1]
}

/// Sign and absolute value of the determinant of the matrix whose columns
/// (equivalently rows) are `columns`.
pub fn det_sign(columns: &[IntVec]) -> (Sign, BigInt) {
    let d = determinant(columns);
    (Sign::of(&d), d.abs())
}

/// Integer generator of the orthogonal complement of `dim - 1` vectors,
/// via signed maximal minors. Not normalized.
fn orthogonal_complement_generator(dim: usize, vectors: &[IntVec]) -> Result<IntVec, GeomError> {
    if vectors.len() + 1 != dim {
        return Err(GeomError::WrongCount {
            expected: dim.saturating_sub(1),
            dim,
            got: vectors.len(),
        });
    }
    for v in vectors {
        if v.dim() != dim {
            return Err(GeomError::DimensionMismatch {
                expected: dim,
                got: v.dim(),
            });
        }
    }
    let coords: Vec<BigInt> = (0..dim)
        .map(|skip| {
            let minor: Vec<IntVec> = vectors
                .iter()
                .map(|v| {
                    IntVec::new(
                        v.coords()
                            .iter()
                            .enumerate()
                            .filter(|(j, _)| *j != skip)
                            .map(|(_, c)| c.clone())
                            .collect(),
                    )
                })
                .collect();
            let d = determinant(&minor);
            if skip % 2 == 0 {
                d
            } else {
                -d
            }
        })
        .collect();
    let nu = IntVec::new(coords);
    if nu.is_zero() {
        return Err(GeomError::DependentInput);
    }
    Ok(nu)
}

/// Primitive normal of the hyperplane spanned by `dim - 1` independent
/// vectors, with the canonical sign of [`Hyperplane`].
pub fn primitive_normal(dim: usize, vectors: &[IntVec]) -> Result<IntVec, GeomError> {
    Ok(Hyperplane::spanned_by(dim, vectors)?.normal)
}

/// Solves `Σ c_i rays_i = point` for linearly independent `rays`. Returns the
/// unique coefficients if the system is consistent.
pub fn solve_in_span(rays: &[IntVec], point: &RatVec) -> Option<RatVec> {
    let n = point.dim();
    let k = rays.len();
    // Augmented n × (k+1) matrix.
    let mut m: Vec<Vec<BigRational>> = (0..n)
        .map(|i| {
            let mut row: Vec<BigRational> = rays
                .iter()
                .map(|r| BigRational::from_integer(r.coords()[i].clone()))
                .collect();
            row.push(point.coords()[i].clone());
            row
        })
        .collect();
    let mut pivot_cols = Vec::with_capacity(k);
    let mut r = 0;
    for c in 0..k {
        let Some(p) = (r..n).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(r, p);
        let pv = m[r][c].clone();
        for x in m[r].iter_mut() {
            *x /= &pv;
        }
        let prow = m[r].clone();
        for (i, row) in m.iter_mut().enumerate() {
            if i != r && !row[c].is_zero() {
                let f = row[c].clone();
                for (x, p) in row.iter_mut().zip(&prow) {
                    *x -= &f * p;
                }
            }
        }
        pivot_cols.push(c);
        r += 1;
    }
    if m[r..].iter().any(|row| !row[k].is_zero()) {
        return None;
    }
    let mut coeffs = vec![BigRational::zero(); k];
    for (row, &c) in pivot_cols.iter().enumerate() {
        coeffs[c] = m[row][k].clone();
    }
    Some(RatVec(coeffs))
}

/// Tests whether `point` lies in the closed cone on the independent `rays`,
/// returning the nonnegative coefficients as certificate when it does.
pub fn cone_membership(rays: &[IntVec], point: &RatVec) -> Option<RatVec> {
    let coeffs = solve_in_span(rays, point)?;
    if coeffs.coords().iter().any(Signed::is_negative) {
        None
    } else {
        Some(coeffs)
    }
}

/// Decides whether the closed simplicial cones on `rays_a` and `rays_b`
/// intersect in more than the cone on `common`, the rays they share.
///
/// Feasibility of `Σ α_i a_i = Σ β_j b_j`, `α, β ≥ 0`, with the coefficients
/// of `a`'s non-shared rays summing to one.
pub fn cones_meet_beyond_common_face(
    rays_a: &[IntVec],
    rays_b: &[IntVec],
    common: &[IntVec],
) -> bool {
    let Some(dim) = rays_a.first().or(rays_b.first()).map(IntVec::dim) else {
        return false;
    };
    meet_system(rays_a, rays_b, common).feasible(dim).0
}

/// The linear system behind [`cones_meet_beyond_common_face`], exposed so
/// callers can run both deciders on it.
pub fn meet_system(rays_a: &[IntVec], rays_b: &[IntVec], common: &[IntVec]) -> LinearSystem {
    let ka = rays_a.len();
    let kb = rays_b.len();
    let dim = rays_a.first().or(rays_b.first()).map_or(0, IntVec::dim);
    let mut sys = LinearSystem::new(ka + kb);
    for i in 0..ka + kb {
        sys.add_nonnegative(i);
    }
    for d in 0..dim {
        let mut coeffs = Vec::with_capacity(ka + kb);
        coeffs.extend(
            rays_a
                .iter()
                .map(|r| BigRational::from_integer(r.coords()[d].clone())),
        );
        coeffs.extend(
            rays_b
                .iter()
                .map(|r| BigRational::from_integer(-r.coords()[d].clone())),
        );
        sys.add_eq(coeffs, BigRational::zero());
    }
    let mut norm = vec![BigRational::zero(); ka + kb];
    for (i, r) in rays_a.iter().enumerate() {
        if !common.contains(r) {
            norm[i] = BigRational::one();
        }
    }
    sys.add_eq(norm, BigRational::one());
    sys
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn iv(v: &[i64]) -> IntVec {
        IntVec::from_i64s(v)
    }

    /// Naive Laplace expansion along the first row.
    fn cofactor_det(m: &[Vec<i64>]) -> BigInt {
        let n = m.len();
        if n == 0 {
            return BigInt::one();
        }
        (0..n)
            .map(|j| {
                let minor: Vec<Vec<i64>> = m[1..]
                    .iter()
                    .map(|r| {
                        r.iter()
                            .enumerate()
                            .filter(|(k, _)| *k != j)
                            .map(|(_, &x)| x)
                            .collect()
                    })
                    .collect();
                let term = BigInt::from(m[0][j]) * cofactor_det(&minor);
                if j % 2 == 0 {
                    term
                } else {
                    -term
                }
            })
            .sum()
    }

    fn mat(m: &[Vec<i64>]) -> Vec<IntVec> {
        m.iter().map(|r| iv(r)).collect()
    }

    fn matmul(a: &[Vec<i64>], b: &[Vec<i64>]) -> Vec<Vec<i64>> {
        let n = a.len();
        (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| (0..n).map(|k| a[i][k] * b[k][j]).sum())
                    .collect()
            })
            .collect()
    }

    #[test]
    fn det_sign_examples() {
        assert_eq!(
            det_sign(&[iv(&[1, 0]), iv(&[0, 1])]),
            (Sign::Positive, BigInt::one())
        );
        assert_eq!(
            det_sign(&[iv(&[0, 1]), iv(&[1, 0])]),
            (Sign::Negative, BigInt::one())
        );
        assert_eq!(
            det_sign(&[iv(&[1, 0]), iv(&[1, -1])]),
            (Sign::Negative, BigInt::one())
        );
        assert_eq!(det_sign(&[iv(&[2, 4]), iv(&[1, 2])]).0, Sign::Zero);
    }

    #[test]
    fn primitive_normal_examples() {
        assert_eq!(primitive_normal(2, &[iv(&[1, -1])]).unwrap(), iv(&[1, 1]));
        assert_eq!(
            primitive_normal(3, &[iv(&[1, 0, 0]), iv(&[0, 1, 0])]).unwrap(),
            iv(&[0, 0, 1])
        );
        assert_eq!(primitive_normal(2, &[iv(&[1, 0])]).unwrap(), iv(&[0, 1]));
        assert_eq!(primitive_normal(1, &[]).unwrap(), iv(&[1]));
    }

    #[test]
    fn primitive_normal_rejects_dependent_input() {
        assert_eq!(
            primitive_normal(3, &[iv(&[1, 2, 3]), iv(&[2, 4, 6])]),
            Err(GeomError::DependentInput)
        );
        assert!(matches!(
            primitive_normal(3, &[iv(&[1, 2, 3])]),
            Err(GeomError::WrongCount { .. })
        ));
    }

    #[test]
    fn ambiguous_hyperplane_flag() {
        // The line through (1,1) has normal ±(1,-1), orthogonal to 𝟙.
        let h = Hyperplane::spanned_by(2, &[iv(&[1, 1])]).unwrap();
        assert!(h.is_ambiguous());
        assert_eq!(h.normal(), &iv(&[1, -1]));
        let h = Hyperplane::spanned_by(2, &[iv(&[1, -1])]).unwrap();
        assert!(!h.is_ambiguous());
    }

    #[test]
    fn cone_membership_examples() {
        let e = [iv(&[1, 0]), iv(&[0, 1])];
        assert_eq!(
            cone_membership(&e, &RatVec::from_i64s(&[3, 5])),
            Some(RatVec::from_i64s(&[3, 5]))
        );
        assert_eq!(cone_membership(&e, &RatVec::from_i64s(&[1, -1])), None);
        let c = [iv(&[1, 0]), iv(&[1, -1])];
        assert_eq!(
            cone_membership(&c, &RatVec::from_i64s(&[2, -1])),
            Some(RatVec::from_i64s(&[1, 1]))
        );
        // Outside the span of a lower-dimensional cone.
        assert_eq!(
            cone_membership(&[iv(&[1, 0, 0])], &RatVec::from_i64s(&[1, 1, 0])),
            None
        );
    }

    #[test]
    fn cones_meet_examples() {
        let e1 = iv(&[1, 0]);
        let e2 = iv(&[0, 1]);
        assert!(!cones_meet_beyond_common_face(
            &[e1.clone(), e2.clone()],
            &[iv(&[-1, 0]), e2.clone()],
            std::slice::from_ref(&e2)
        ));
        assert!(!cones_meet_beyond_common_face(
            &[e1.clone(), e2.clone()],
            &[e1.clone(), iv(&[1, -1])],
            std::slice::from_ref(&e1)
        ));
        assert!(cones_meet_beyond_common_face(
            &[e1.clone(), e2.clone()],
            &[iv(&[1, 1]), iv(&[-1, 1])],
            &[]
        ));
    }

    #[test]
    fn meet_deciders_agree_on_examples() {
        let cases = [
            (vec![iv(&[1, 0, 0]), iv(&[0, 1, 0]), iv(&[0, 0, 1])],
             vec![iv(&[1, 1, 0]), iv(&[0, 1, 0]), iv(&[0, 0, -1])]),
            (vec![iv(&[1, 0, 0]), iv(&[0, 1, 0]), iv(&[0, 0, 1])],
             vec![iv(&[-1, 0, 0]), iv(&[0, 1, 0]), iv(&[0, 0, 1])]),
        ];
        for (a, b) in cases {
            let common: Vec<IntVec> = a.iter().filter(|r| b.contains(r)).cloned().collect();
            let sys = meet_system(&a, &b, &common);
            assert_eq!(sys.feasible_fourier_motzkin(), sys.feasible_simplex());
        }
    }

    proptest! {
        #[test]
        fn det_multiplicative(
            a in prop::collection::vec(prop::collection::vec(-4i64..=4, 3), 3),
            b in prop::collection::vec(prop::collection::vec(-4i64..=4, 3), 3),
        ) {
            let ab = matmul(&a, &b);
            prop_assert_eq!(determinant(&mat(&a)), cofactor_det(&a));
            prop_assert_eq!(determinant(&mat(&ab)), cofactor_det(&ab));
            prop_assert_eq!(determinant(&mat(&ab)), determinant(&mat(&a)) * determinant(&mat(&b)));
        }

        #[test]
        fn primitive_normal_is_orthogonal_and_primitive(
            vs in prop::collection::vec(prop::collection::vec(-5i64..=5, 4), 3)
        ) {
            let vs: Vec<IntVec> = vs.iter().map(|v| iv(v)).collect();
            match primitive_normal(4, &vs) {
                Ok(nu) => {
                    prop_assert!(nu.is_primitive());
                    for v in &vs {
                        prop_assert!(nu.dot(v).is_zero());
                    }
                }
                Err(e) => prop_assert_eq!(e, GeomError::DependentInput),
            }
        }

        #[test]
        fn cone_membership_round_trip(
            c in prop::collection::vec((0i64..=9, 1i64..=5), 3)
        ) {
            let rays = [iv(&[1, 0, 0]), iv(&[1, 1, 0]), iv(&[0, -1, 1])];
            let coeffs: Vec<BigRational> = c
                .iter()
                .map(|&(n, d)| BigRational::new(n.into(), d.into()))
                .collect();
            let point: Vec<BigRational> = (0..3)
                .map(|i| {
                    rays.iter()
                        .zip(&coeffs)
                        .map(|(r, k)| k * BigRational::from_integer(r.coords()[i].clone()))
                        .sum()
                })
                .collect();
            prop_assert_eq!(
                cone_membership(&rays, &RatVec::new(point)),
                Some(RatVec::new(coeffs))
            );
        }
    }
}

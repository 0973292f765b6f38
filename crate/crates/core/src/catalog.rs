//! Builders for the desk-scale example structures: group algebras, dual group
//! algebras, Sweedler's four-dimensional Hopf algebra with its R-matrix
//! family, and cyclic-group R-matrices.

use crate::error::Error;
use crate::field::{Field, PrimeField};
use crate::hopfcore::{AlgebraData, BialgebraData, CoalgebraData, HopfData, RMatrix};
use crate::tensorlin::LinearMap;

/// Multiplication table of the cyclic group Z_n, `table[i][j] = (i+j) mod n`.
pub fn z_n_table(n: usize) -> Vec<Vec<usize>> {
    (0..n)
        .map(|i| (0..n).map(|j| (i + j) % n).collect())
        .collect()
}

/// Validate a multiplication table as a group: closure, associativity, a
/// two-sided identity, and inverses. Returns the identity element.
fn validate_group(table: &[Vec<usize>]) -> Result<usize, Error> {
    let n = table.len();
    if n == 0 {
        return Err(Error::Invalid("empty multiplication table".into()));
    }
    for row in table {
        if row.len() != n {
            return Err(Error::Invalid("multiplication table is not square".into()));
        }
        if row.iter().any(|&x| x >= n) {
            return Err(Error::Invalid("table entry out of range".into()));
        }
    }
    let identity = (0..n)
        .find(|&e| (0..n).all(|i| table[e][i] == i && table[i][e] == i))
        .ok_or(Error::Invalid("table has no two-sided identity".into()))?;
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                if table[table[i][j]][k] != table[i][table[j][k]] {
                    return Err(Error::Invalid(format!(
                        "table is not associative at ({i}, {j}, {k})"
                    )));
                }
            }
        }
    }
    for i in 0..n {
        if !(0..n).any(|j| table[i][j] == identity && table[j][i] == identity) {
            return Err(Error::Invalid(format!("element {i} has no inverse")));
        }
    }
    Ok(identity)
}

fn group_inverse(table: &[Vec<usize>], identity: usize, g: usize) -> usize {
    (0..table.len())
        .find(|&j| table[g][j] == identity && table[j][g] == identity)
        .expect("validated group")
}

/// The trivial Hopf algebra `k`.
pub fn build_trivial<F: Field>(field: F) -> HopfData<F> {
    let mult = LinearMap::from_triplets(field.clone(), vec![1], vec![1, 1], [(0, 0, field.one())])
        .unwrap();
    let unit =
        LinearMap::from_triplets(field.clone(), vec![1], vec![], [(0, 0, field.one())]).unwrap();
    let comult =
        LinearMap::from_triplets(field.clone(), vec![1, 1], vec![1], [(0, 0, field.one())])
            .unwrap();
    let counit =
        LinearMap::from_triplets(field.clone(), vec![], vec![1], [(0, 0, field.one())]).unwrap();
    let antipode = LinearMap::identity(field, vec![1]);
    HopfData::new(
        BialgebraData::new(
            AlgebraData::new(mult, unit).unwrap(),
            CoalgebraData::new(comult, counit).unwrap(),
        )
        .unwrap(),
        antipode,
    )
    .unwrap()
}

/// The group algebra `kG` with grouplike comultiplication
/// `Δg = g ⊗ g`, `ε(g) = 1`, `S(g) = g^{-1}`.
pub fn build_group_algebra<F: Field>(field: F, table: &[Vec<usize>]) -> Result<HopfData<F>, Error> {
    let identity = validate_group(table)?;
    let n = table.len();
    let one = field.one();
    let mut mult_triplets = Vec::new();
    for i in 0..n {
        for j in 0..n {
            mult_triplets.push((table[i][j], i * n + j, one.clone()));
        }
    }
    let mult = LinearMap::from_triplets(field.clone(), vec![n], vec![n, n], mult_triplets)?;
    let unit =
        LinearMap::from_triplets(field.clone(), vec![n], vec![], [(identity, 0, one.clone())])?;
    let comult = LinearMap::from_triplets(
        field.clone(),
        vec![n, n],
        vec![n],
        (0..n).map(|g| (g * n + g, g, one.clone())),
    )?;
    let counit = LinearMap::from_triplets(
        field.clone(),
        vec![],
        vec![n],
        (0..n).map(|g| (0, g, one.clone())),
    )?;
    let antipode = LinearMap::from_triplets(
        field.clone(),
        vec![n],
        vec![n],
        (0..n).map(|g| (group_inverse(table, identity, g), g, one.clone())),
    )?;
    HopfData::new(
        BialgebraData::new(
            AlgebraData::new(mult, unit)?,
            CoalgebraData::new(comult, counit)?,
        )?,
        antipode,
    )
}

/// The dual group algebra `k^G` on the delta basis:
/// `δ_a δ_b = [a=b] δ_a`, `Δδ_g = Σ_{hk=g} δ_h ⊗ δ_k`, `ε(δ_g) = [g=e]`,
/// `S(δ_g) = δ_{g^{-1}}`.
pub fn build_dual_group_algebra<F: Field>(
    field: F,
    table: &[Vec<usize>],
) -> Result<HopfData<F>, Error> {
    let identity = validate_group(table)?;
    let n = table.len();
    let one = field.one();
    let mult = LinearMap::from_triplets(
        field.clone(),
        vec![n],
        vec![n, n],
        (0..n).map(|a| (a, a * n + a, one.clone())),
    )?;
    let unit = LinearMap::from_triplets(
        field.clone(),
        vec![n],
        vec![],
        (0..n).map(|a| (a, 0, one.clone())),
    )?;
    let mut comult_triplets = Vec::new();
    for h in 0..n {
        for k in 0..n {
            comult_triplets.push((h * n + k, table[h][k], one.clone()));
        }
    }
    let comult = LinearMap::from_triplets(field.clone(), vec![n, n], vec![n], comult_triplets)?;
    let counit =
        LinearMap::from_triplets(field.clone(), vec![], vec![n], [(0, identity, one.clone())])?;
    let antipode = LinearMap::from_triplets(
        field.clone(),
        vec![n],
        vec![n],
        (0..n).map(|g| (group_inverse(table, identity, g), g, one.clone())),
    )?;
    HopfData::new(
        BialgebraData::new(
            AlgebraData::new(mult, unit)?,
            CoalgebraData::new(comult, counit)?,
        )?,
        antipode,
    )
}

/// Sweedler's four-dimensional Hopf algebra on the basis `(1, g, x, gx)`,
/// with `g² = 1`, `x² = 0`, `xg = -gx`, `Δg = g⊗g`, `Δx = x⊗1 + g⊗x`,
/// `S(g) = g`, `S(x) = -gx`, together with the R-matrix
/// `R_α = ½(1⊗1 + 1⊗g + g⊗1 - g⊗g) + (α/2)(x⊗x - x⊗gx + gx⊗x + gx⊗gx)`.
/// Requires 2 invertible in the field.
pub fn build_sweedler<F: Field>(
    field: F,
    alpha: F::Elem,
) -> Result<(HopfData<F>, RMatrix<F>), Error> {
    let half = field.inv(&field.from_int(2)).ok_or(Error::Invalid(
        "Sweedler R-matrix needs 2 invertible (characteristic 2 rejected)".into(),
    ))?;
    let one = field.one();
    let neg = |v: &F::Elem| field.neg(v);
    // basis indices
    const E1: usize = 0;
    const G: usize = 1;
    const X: usize = 2;
    const GX: usize = 3;
    let mut mult_triplets: Vec<(usize, usize, F::Elem)> = Vec::new();
    let mut put = |i: usize, j: usize, k: usize, v: F::Elem| {
        mult_triplets.push((k, i * 4 + j, v));
    };
    for b in 0..4 {
        put(E1, b, b, one.clone());
        if b != E1 {
            put(b, E1, b, one.clone());
        }
    }
    put(G, G, E1, one.clone());
    put(G, X, GX, one.clone());
    put(G, GX, X, one.clone());
    put(X, G, GX, neg(&one));
    put(GX, G, X, neg(&one));
    // x·x = x·gx = gx·x = gx·gx = 0
    let mult = LinearMap::from_triplets(field.clone(), vec![4], vec![4, 4], mult_triplets)?;
    let unit = LinearMap::from_triplets(field.clone(), vec![4], vec![], [(E1, 0, one.clone())])?;
    let comult = LinearMap::from_triplets(
        field.clone(),
        vec![4, 4],
        vec![4],
        [
            (E1 * 4 + E1, E1, one.clone()),
            (G * 4 + G, G, one.clone()),
            (X * 4 + E1, X, one.clone()),
            (G * 4 + X, X, one.clone()),
            (GX * 4 + G, GX, one.clone()),
            (E1 * 4 + GX, GX, one.clone()),
        ],
    )?;
    let counit = LinearMap::from_triplets(
        field.clone(),
        vec![],
        vec![4],
        [(0, E1, one.clone()), (0, G, one.clone())],
    )?;
    let antipode = LinearMap::from_triplets(
        field.clone(),
        vec![4],
        vec![4],
        [
            (E1, E1, one.clone()),
            (G, G, one.clone()),
            (GX, X, neg(&one)),
            (X, GX, one.clone()),
        ],
    )?;
    let hopf = HopfData::new(
        BialgebraData::new(
            AlgebraData::new(mult, unit)?,
            CoalgebraData::new(comult, counit)?,
        )?,
        antipode,
    )?;
    let mut coeffs = vec![vec![field.zero(); 4]; 4];
    coeffs[E1][E1] = half.clone();
    coeffs[E1][G] = half.clone();
    coeffs[G][E1] = half.clone();
    coeffs[G][G] = neg(&half);
    let alpha_half = field.mul(&alpha, &half);
    coeffs[X][X] = alpha_half.clone();
    coeffs[X][GX] = neg(&alpha_half);
    coeffs[GX][X] = alpha_half.clone();
    coeffs[GX][GX] = alpha_half;
    let r = RMatrix::from_coeffs(field, &coeffs)?;
    Ok((hopf, r))
}

/// `kZ_n` over `F_p` with the R-matrix
/// `R = n^{-1} Σ_{a,b} ω^{-ab} g^a ⊗ g^b`, for `ω` of exact multiplicative
/// order `n`.
pub fn build_cyclic_qt(
    field: PrimeField,
    n: usize,
    omega: u64,
) -> Result<(HopfData<PrimeField>, RMatrix<PrimeField>), Error> {
    if n == 0 {
        return Err(Error::Invalid("group order must be positive".into()));
    }
    let order = field
        .order(omega)
        .ok_or(Error::Invalid("omega must be nonzero".into()))?;
    if order != n as u64 {
        return Err(Error::Invalid(format!(
            "omega = {omega} has multiplicative order {order}, expected {n}"
        )));
    }
    let n_inv = field
        .inv(&field.from_int(n as i64))
        .ok_or(Error::Invalid(format!(
            "{n} is not invertible in the field"
        )))?;
    let hopf = build_group_algebra(field, &z_n_table(n))?;
    let mut coeffs = vec![vec![0u64; n]; n];
    for (a, row) in coeffs.iter_mut().enumerate() {
        for (b, value) in row.iter_mut().enumerate() {
            // ω^{-ab} = ω^{n - (ab mod n)}
            let e = (n - (a * b) % n) % n;
            *value = field.mul(&n_inv, &field.pow(omega, e as u64));
        }
    }
    let r = RMatrix::from_coeffs(field, &coeffs)?;
    Ok((hopf, r))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::Rationals;
    use crate::hopfcore::{check_hopf, check_quasitriangular};

    #[test]
    fn group_algebras_pass() {
        for n in [2usize, 3, 4] {
            let h = build_group_algebra(Rationals, &z_n_table(n)).unwrap();
            assert!(check_hopf(&h).passed(), "kZ_{n}");
            assert!(h.bialgebra().is_cocommutative());
            assert!(h.bialgebra().is_commutative());
        }
    }

    #[test]
    fn broken_tables_are_rejected() {
        // identity exists but the non-identity element has no inverse
        let no_inverse = vec![vec![0, 1], vec![1, 1]];
        assert!(build_group_algebra(Rationals, &no_inverse).is_err());
        // identity exists but (1·1)·2 ≠ 1·(1·2)
        let not_associative = vec![vec![0, 1, 2], vec![1, 2, 1], vec![2, 1, 0]];
        assert!(build_group_algebra(Rationals, &not_associative).is_err());
    }

    #[test]
    fn dual_group_algebras_pass() {
        let f7 = PrimeField::new(7).unwrap();
        let h = build_dual_group_algebra(f7, &z_n_table(3)).unwrap();
        assert!(check_hopf(&h).passed());
        assert!(h.bialgebra().is_commutative());
        let h2 = build_dual_group_algebra(Rationals, &z_n_table(2)).unwrap();
        assert!(check_hopf(&h2).passed());
        // the trivial group gives k
        let k = build_dual_group_algebra(Rationals, &z_n_table(1)).unwrap();
        assert!(check_hopf(&k).passed());
        assert_eq!(k.dim(), 1);
    }

    #[test]
    fn sweedler_rejects_characteristic_two() {
        let f2 = PrimeField::new(2).unwrap();
        assert!(build_sweedler(f2, 0).is_err());
    }

    #[test]
    fn sweedler_over_rationals_passes() {
        let (h, r) = build_sweedler(Rationals, Rationals.one()).unwrap();
        assert!(check_hopf(&h).passed());
        assert!(check_quasitriangular(&h, &r).unwrap().passed());
    }

    #[test]
    fn cyclic_qt_examples() {
        let f7 = PrimeField::new(7).unwrap();
        let (h, r) = build_cyclic_qt(f7, 3, 2).unwrap();
        assert!(check_hopf(&h).passed());
        assert!(check_quasitriangular(&h, &r).unwrap().passed());

        let f5 = PrimeField::new(5).unwrap();
        let (h, r) = build_cyclic_qt(f5, 2, 4).unwrap();
        assert!(check_quasitriangular(&h, &r).unwrap().passed());

        // order(6 mod 7) = 2, not 3
        assert!(build_cyclic_qt(f7, 3, 6).is_err());
    }
}

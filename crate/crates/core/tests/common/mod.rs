//! Test-only oracle machinery: structure constants extracted to plain dense
//! arrays, and formulas expanded basis vector by basis vector with explicit
//! index sums. Nothing here goes through `compose`/`tensor`, so these
//! expansions are an independent route against the composed-matrix
//! constructions they check.

#![allow(dead_code)]

use relhopf_core::field::Field;
use relhopf_core::hopfcore::{HopfData, RMatrix, SigmaForm};
use relhopf_core::tensorlin::LinearMap;

pub struct Consts<F: Field> {
    pub field: F,
    pub dim: usize,
    /// e_i e_j = Σ_k mult[i][j][k] e_k
    pub mult: Vec<Vec<Vec<F::Elem>>>,
    pub unit: Vec<F::Elem>,
    /// Δ e_i = Σ_{j,k} comult[i][j][k] e_j ⊗ e_k
    pub comult: Vec<Vec<Vec<F::Elem>>>,
    pub counit: Vec<F::Elem>,
    /// S e_i = Σ_j antipode[i][j] e_j
    pub antipode: Vec<Vec<F::Elem>>,
}

pub fn extract<F: Field>(h: &HopfData<F>) -> Consts<F> {
    let d = h.dim();
    let mult = (0..d)
        .map(|i| {
            (0..d)
                .map(|j| (0..d).map(|k| h.mult().entry(k, i * d + j)).collect())
                .collect()
        })
        .collect();
    let unit = (0..d).map(|i| h.unit().entry(i, 0)).collect();
    let comult = (0..d)
        .map(|i| {
            (0..d)
                .map(|j| (0..d).map(|k| h.comult().entry(j * d + k, i)).collect())
                .collect()
        })
        .collect();
    let counit = (0..d).map(|i| h.counit().entry(0, i)).collect();
    let antipode = (0..d)
        .map(|i| (0..d).map(|j| h.antipode().entry(j, i)).collect())
        .collect();
    Consts {
        field: h.field().clone(),
        dim: d,
        mult,
        unit,
        comult,
        counit,
        antipode,
    }
}

impl<F: Field> Consts<F> {
    fn zero_vec(&self, n: usize) -> Vec<F::Elem> {
        vec![self.field.zero(); n]
    }

    /// Product of two vectors in H.
    pub fn mul_vec(&self, a: &[F::Elem], b: &[F::Elem]) -> Vec<F::Elem> {
        let f = &self.field;
        let mut out = self.zero_vec(self.dim);
        for i in 0..self.dim {
            if f.is_zero(&a[i]) {
                continue;
            }
            for j in 0..self.dim {
                if f.is_zero(&b[j]) {
                    continue;
                }
                let c = f.mul(&a[i], &b[j]);
                for k in 0..self.dim {
                    let t = f.mul(&c, &self.mult[i][j][k]);
                    out[k] = f.add(&out[k], &t);
                }
            }
        }
        out
    }

    pub fn apply_antipode(&self, a: &[F::Elem]) -> Vec<F::Elem> {
        let f = &self.field;
        let mut out = self.zero_vec(self.dim);
        for i in 0..self.dim {
            if f.is_zero(&a[i]) {
                continue;
            }
            for j in 0..self.dim {
                let t = f.mul(&a[i], &self.antipode[i][j]);
                out[j] = f.add(&out[j], &t);
            }
        }
        out
    }

    /// The antipode inverse as a power of S: S, S², … until the identity is
    /// reached. Panics if S is not of finite order up to 64; all catalog
    /// antipodes are.
    pub fn antipode_inverse_by_order(&self) -> Vec<Vec<F::Elem>> {
        let f = &self.field;
        let d = self.dim;
        let id: Vec<Vec<F::Elem>> = (0..d)
            .map(|i| {
                (0..d)
                    .map(|j| if i == j { f.one() } else { f.zero() })
                    .collect()
            })
            .collect();
        let mut power = self.antipode.clone();
        let mut prev = id.clone();
        for _ in 0..64 {
            if power == id {
                return prev;
            }
            // prev = power, power = S ∘ power (as [input][output] tables)
            let mut next = vec![self.zero_vec(d); d];
            for (i, row) in power.iter().enumerate() {
                for (m, v) in row.iter().enumerate() {
                    if f.is_zero(v) {
                        continue;
                    }
                    for j in 0..d {
                        let t = f.mul(v, &self.antipode[m][j]);
                        next[i][j] = f.add(&next[i][j], &t);
                    }
                }
            }
            prev = power;
            power = next;
        }
        panic!("antipode order exceeds 64");
    }

    /// Adjoint action table: `adj[i][j][k]` is the coefficient of `e_k` in
    /// `e_i ▷ e_j = (e_i)_1 e_j S((e_i)_2)`.
    pub fn adjoint_table(&self) -> Vec<Vec<Vec<F::Elem>>> {
        let f = &self.field;
        let d = self.dim;
        let mut out = vec![vec![self.zero_vec(d); d]; d];
        for i in 0..d {
            for j in 0..d {
                let mut acc = self.zero_vec(d);
                for p in 0..d {
                    for q in 0..d {
                        let c = &self.comult[i][p][q];
                        if f.is_zero(c) {
                            continue;
                        }
                        let mut ej = self.zero_vec(d);
                        ej[j] = f.one();
                        let mut ep = self.zero_vec(d);
                        ep[p] = f.one();
                        let mut eq = self.zero_vec(d);
                        eq[q] = f.one();
                        let left = self.mul_vec(&ep, &ej);
                        let term = self.mul_vec(&left, &self.apply_antipode(&eq));
                        for k in 0..d {
                            let t = f.mul(c, &term[k]);
                            acc[k] = f.add(&acc[k], &t);
                        }
                    }
                }
                out[i][j] = acc;
            }
        }
        out
    }

    /// Transmuted comultiplication table by termwise expansion of
    /// `Δ(h) = h_1 S(R²) ⊗ R¹ ▷ h_2`: `out[a][u][v]` is the coefficient of
    /// `e_u ⊗ e_v`.
    pub fn enveloping_comult_table(&self, r: &RMatrix<F>) -> Vec<Vec<Vec<F::Elem>>> {
        let f = &self.field;
        let d = self.dim;
        let adj = self.adjoint_table();
        let mut out = vec![vec![self.zero_vec(d); d]; d];
        for a in 0..d {
            for p in 0..d {
                for q in 0..d {
                    let c = &self.comult[a][p][q];
                    if f.is_zero(c) {
                        continue;
                    }
                    for i in 0..d {
                        for j in 0..d {
                            let rc = r.coeff(i, j);
                            if f.is_zero(&rc) {
                                continue;
                            }
                            let weight = f.mul(c, &rc);
                            // left factor: e_p S(e_j)
                            let mut ep = self.zero_vec(d);
                            ep[p] = f.one();
                            let mut ej = self.zero_vec(d);
                            ej[j] = f.one();
                            let left = self.mul_vec(&ep, &self.apply_antipode(&ej));
                            // right factor: e_i ▷ e_q
                            for u in 0..d {
                                if f.is_zero(&left[u]) {
                                    continue;
                                }
                                let w = f.mul(&weight, &left[u]);
                                for v in 0..d {
                                    let t = f.mul(&w, &adj[i][q][v]);
                                    out[a][u][v] = f.add(&out[a][u][v], &t);
                                }
                            }
                        }
                    }
                }
            }
        }
        out
    }

    /// Coaction table from `λ(m) = R² ⊗ R¹ ▷ m`: `out[a][u][v]` is the
    /// coefficient of `e_u ⊗ e_v` in `λ(e_a)`.
    pub fn enveloping_coaction_table(&self, r: &RMatrix<F>) -> Vec<Vec<Vec<F::Elem>>> {
        let f = &self.field;
        let d = self.dim;
        let adj = self.adjoint_table();
        let mut out = vec![vec![self.zero_vec(d); d]; d];
        for a in 0..d {
            for i in 0..d {
                for j in 0..d {
                    let rc = r.coeff(i, j);
                    if f.is_zero(&rc) {
                        continue;
                    }
                    for v in 0..d {
                        let t = f.mul(&rc, &adj[i][a][v]);
                        out[a][j][v] = f.add(&out[a][j][v], &t);
                    }
                }
            }
        }
        out
    }

    /// Coadjoint coaction table by expansion of `λ(h) = S^{-1}(h_3) h_1 ⊗ h_2`.
    pub fn coadjoint_coaction_table(&self) -> Vec<Vec<Vec<F::Elem>>> {
        let f = &self.field;
        let d = self.dim;
        let s_inv = self.antipode_inverse_by_order();
        let mut out = vec![vec![self.zero_vec(d); d]; d];
        for a in 0..d {
            // Δ²(e_a): Σ comult[a][m][r3] comult[m][r1][r2] e_{r1}⊗e_{r2}⊗e_{r3}
            for m in 0..d {
                for r3 in 0..d {
                    let c1 = &self.comult[a][m][r3];
                    if f.is_zero(c1) {
                        continue;
                    }
                    for r1 in 0..d {
                        for r2 in 0..d {
                            let c2 = &self.comult[m][r1][r2];
                            if f.is_zero(c2) {
                                continue;
                            }
                            let weight = f.mul(c1, c2);
                            // S^{-1}(e_{r3}) e_{r1}
                            let mut left = self.zero_vec(d);
                            for s in 0..d {
                                if f.is_zero(&s_inv[r3][s]) {
                                    continue;
                                }
                                for k in 0..d {
                                    let t = f.mul(&s_inv[r3][s], &self.mult[s][r1][k]);
                                    left[k] = f.add(&left[k], &t);
                                }
                            }
                            for u in 0..d {
                                let t = f.mul(&weight, &left[u]);
                                out[a][u][r2] = f.add(&out[a][u][r2], &t);
                            }
                        }
                    }
                }
            }
        }
        out
    }

    /// Function-algebra product table by expansion of
    /// `h ◇ h' = σ(h'_2, S(h_1) h_3) h_2 h'_1`: `out[a][b][k]` is the
    /// coefficient of `e_k` in `e_a ◇ e_b`.
    pub fn function_mult_table(&self, sigma: &SigmaForm<F>) -> Vec<Vec<Vec<F::Elem>>> {
        let f = &self.field;
        let d = self.dim;
        let mut out = vec![vec![self.zero_vec(d); d]; d];
        for a in 0..d {
            for b in 0..d {
                for m in 0..d {
                    for r3 in 0..d {
                        let c1 = &self.comult[a][m][r3];
                        if f.is_zero(c1) {
                            continue;
                        }
                        for r1 in 0..d {
                            for r2 in 0..d {
                                let c2 = &self.comult[m][r1][r2];
                                if f.is_zero(c2) {
                                    continue;
                                }
                                for b1 in 0..d {
                                    for b2 in 0..d {
                                        let c3 = &self.comult[b][b1][b2];
                                        if f.is_zero(c3) {
                                            continue;
                                        }
                                        let weight = f.mul(&f.mul(c1, c2), c3);
                                        // σ(e_{b2}, S(e_{r1}) e_{r3})
                                        let mut scalar = f.zero();
                                        for s in 0..d {
                                            if f.is_zero(&self.antipode[r1][s]) {
                                                continue;
                                            }
                                            for t in 0..d {
                                                let m1 = f.mul(
                                                    &self.antipode[r1][s],
                                                    &self.mult[s][r3][t],
                                                );
                                                let m2 = f.mul(&m1, &sigma.coeff(b2, t));
                                                scalar = f.add(&scalar, &m2);
                                            }
                                        }
                                        if f.is_zero(&scalar) {
                                            continue;
                                        }
                                        let w = f.mul(&weight, &scalar);
                                        for k in 0..d {
                                            let t = f.mul(&w, &self.mult[r2][b1][k]);
                                            out[a][b][k] = f.add(&out[a][b][k], &t);
                                        }
                                    }
                                }
                            }
                        }
                    }
                }
            }
        }
        out
    }
}

/// Compare a `dim → dim ⊗ dim` map against a `[input][left][right]` table.
pub fn comult_matches_table<F: Field>(map: &LinearMap<F>, table: &[Vec<Vec<F::Elem>>]) -> bool {
    let d = table.len();
    for a in 0..d {
        for u in 0..d {
            for v in 0..d {
                if map.entry(u * d + v, a) != table[a][u][v] {
                    return false;
                }
            }
        }
    }
    true
}

/// Compare a `dim ⊗ dim → dim` map against a `[left][right][output]` table.
pub fn mult_matches_table<F: Field>(map: &LinearMap<F>, table: &[Vec<Vec<F::Elem>>]) -> bool {
    let d = table.len();
    for a in 0..d {
        for b in 0..d {
            for k in 0..d {
                if map.entry(k, a * d + b) != table[a][b][k] {
                    return false;
                }
            }
        }
    }
    true
}

//! Dense-semantics, sparse-storage linear maps between tensor products of
//! finite-dimensional vector spaces.
//!
//! A [`LinearMap`] is a matrix together with ordered lists of tensor-factor
//! dimensions for its domain and codomain. Basis vectors of a tensor product
//! are enumerated lexicographically with the last factor fastest, which makes
//! [`LinearMap::tensor`] the ordinary Kronecker product. An element of a space
//! `V` is a map from the empty tensor product (total dimension 1) into `V`.
//!
//! All equality in this crate is exact. Entries are kept in canonical sparse
//! form (columns sorted by row, no explicit zeros), so two maps represent the
//! same matrix iff their entry tables are structurally equal.

use crate::error::Error;
use crate::field::Field;
use crate::report::Witness;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LinearMap<F: Field> {
    field: F,
    domain_dims: Vec<usize>,
    codomain_dims: Vec<usize>,
    /// cols[c] lists (row, value) sorted by row, values nonzero.
    cols: Vec<Vec<(usize, F::Elem)>>,
}

fn total(dims: &[usize]) -> usize {
    dims.iter().product()
}

impl<F: Field> LinearMap<F> {
    pub fn zero(field: F, codomain_dims: Vec<usize>, domain_dims: Vec<usize>) -> Self {
        let cols = vec![Vec::new(); total(&domain_dims)];
        LinearMap {
            field,
            domain_dims,
            codomain_dims,
            cols,
        }
    }

    pub fn identity(field: F, dims: Vec<usize>) -> Self {
        let n = total(&dims);
        let one = field.one();
        let cols = (0..n).map(|c| vec![(c, one.clone())]).collect();
        LinearMap {
            field,
            domain_dims: dims.clone(),
            codomain_dims: dims,
            cols,
        }
    }

    /// Build from `(row, col, value)` triplets; repeated positions are summed.
    pub fn from_triplets(
        field: F,
        codomain_dims: Vec<usize>,
        domain_dims: Vec<usize>,
        triplets: impl IntoIterator<Item = (usize, usize, F::Elem)>,
    ) -> Result<Self, Error> {
        let rows = total(&codomain_dims);
        let ncols = total(&domain_dims);
        let mut per_col: Vec<Vec<(usize, F::Elem)>> = vec![Vec::new(); ncols];
        for (r, c, v) in triplets {
            if r >= rows {
                return Err(Error::DimMismatch {
                    context: "from_triplets row",
                    expected: rows,
                    found: r,
                });
            }
            if c >= ncols {
                return Err(Error::DimMismatch {
                    context: "from_triplets col",
                    expected: ncols,
                    found: c,
                });
            }
            per_col[c].push((r, v));
        }
        for col in per_col.iter_mut() {
            canonicalize(&field, col);
        }
        Ok(LinearMap {
            field,
            domain_dims,
            codomain_dims,
            cols: per_col,
        })
    }

    /// Build from a dense row-major table `rows[r][c]`.
    pub fn from_rows(
        field: F,
        codomain_dims: Vec<usize>,
        domain_dims: Vec<usize>,
        rows: &[Vec<F::Elem>],
    ) -> Result<Self, Error> {
        let nrows = total(&codomain_dims);
        let ncols = total(&domain_dims);
        if rows.len() != nrows {
            return Err(Error::DimMismatch {
                context: "from_rows rows",
                expected: nrows,
                found: rows.len(),
            });
        }
        let mut triplets = Vec::new();
        for (r, row) in rows.iter().enumerate() {
            if row.len() != ncols {
                return Err(Error::DimMismatch {
                    context: "from_rows cols",
                    expected: ncols,
                    found: row.len(),
                });
            }
            for (c, v) in row.iter().enumerate() {
                if !field.is_zero(v) {
                    triplets.push((r, c, v.clone()));
                }
            }
        }
        Self::from_triplets(field, codomain_dims, domain_dims, triplets)
    }

    /// Build from small integers, row-major. Convenient in tests.
    pub fn from_int_rows(
        field: F,
        codomain_dims: Vec<usize>,
        domain_dims: Vec<usize>,
        rows: &[&[i64]],
    ) -> Result<Self, Error> {
        let lifted: Vec<Vec<F::Elem>> = rows
            .iter()
            .map(|row| row.iter().map(|n| field.from_int(*n)).collect())
            .collect();
        Self::from_rows(field, codomain_dims, domain_dims, &lifted)
    }

    pub fn field(&self) -> &F {
        &self.field
    }

    pub fn domain_dims(&self) -> &[usize] {
        &self.domain_dims
    }

    pub fn codomain_dims(&self) -> &[usize] {
        &self.codomain_dims
    }

    pub fn domain_total(&self) -> usize {
        total(&self.domain_dims)
    }

    pub fn codomain_total(&self) -> usize {
        total(&self.codomain_dims)
    }

    pub fn nnz(&self) -> usize {
        self.cols.iter().map(|c| c.len()).sum()
    }

    pub fn entry(&self, row: usize, col: usize) -> F::Elem {
        match self.cols[col].binary_search_by_key(&row, |(r, _)| *r) {
            Ok(i) => self.cols[col][i].1.clone(),
            Err(_) => self.field.zero(),
        }
    }

    pub fn column(&self, col: usize) -> &[(usize, F::Elem)] {
        &self.cols[col]
    }

    pub fn to_dense(&self) -> Vec<Vec<F::Elem>> {
        let mut out = vec![vec![self.field.zero(); self.domain_total()]; self.codomain_total()];
        for (c, col) in self.cols.iter().enumerate() {
            for (r, v) in col {
                out[*r][c] = v.clone();
            }
        }
        out
    }

    /// Reinterpret the factor structure without touching entries. Totals must
    /// be preserved; this is the strictness identification of e.g. `(2,2)`
    /// with `(4)`.
    pub fn reshaped(
        mut self,
        codomain_dims: Vec<usize>,
        domain_dims: Vec<usize>,
    ) -> Result<Self, Error> {
        if total(&domain_dims) != self.domain_total() {
            return Err(Error::DimMismatch {
                context: "reshape domain",
                expected: self.domain_total(),
                found: total(&domain_dims),
            });
        }
        if total(&codomain_dims) != self.codomain_total() {
            return Err(Error::DimMismatch {
                context: "reshape codomain",
                expected: self.codomain_total(),
                found: total(&codomain_dims),
            });
        }
        self.domain_dims = domain_dims;
        self.codomain_dims = codomain_dims;
        Ok(self)
    }

    /// Exact equality of the underlying matrices, ignoring how the factor
    /// lists are split.
    pub fn same_matrix(&self, other: &Self) -> bool {
        self.field == other.field
            && self.domain_total() == other.domain_total()
            && self.codomain_total() == other.codomain_total()
            && self.cols == other.cols
    }

    /// First differing entry with `other`, scanning columns left to right and
    /// rows within a column top down. `None` means the matrices are equal.
    pub fn first_difference(&self, other: &Self) -> Option<Witness> {
        if self.field != other.field
            || self.domain_total() != other.domain_total()
            || self.codomain_total() != other.codomain_total()
        {
            return Some(Witness { row: 0, col: 0 });
        }
        for c in 0..self.cols.len() {
            let (mut i, mut j) = (0, 0);
            let (a, b) = (&self.cols[c], &other.cols[c]);
            loop {
                match (a.get(i), b.get(j)) {
                    (None, None) => break,
                    (Some((r, _)), None) => return Some(Witness { row: *r, col: c }),
                    (None, Some((r, _))) => return Some(Witness { row: *r, col: c }),
                    (Some((ra, va)), Some((rb, vb))) => {
                        if ra == rb {
                            if va != vb {
                                return Some(Witness { row: *ra, col: c });
                            }
                            i += 1;
                            j += 1;
                        } else if ra < rb {
                            return Some(Witness { row: *ra, col: c });
                        } else {
                            return Some(Witness { row: *rb, col: c });
                        }
                    }
                }
            }
        }
        None
    }

    fn check_field(&self, other: &Self) -> Result<(), Error> {
        if self.field != other.field {
            Err(Error::FieldMismatch)
        } else {
            Ok(())
        }
    }

    /// Matrix product `self ∘ other` (apply `other` first).
    pub fn compose(&self, other: &Self) -> Result<Self, Error> {
        self.check_field(other)?;
        if self.domain_total() != other.codomain_total() {
            return Err(Error::DimMismatch {
                context: "compose",
                expected: self.domain_total(),
                found: other.codomain_total(),
            });
        }
        let rows = self.codomain_total();
        let mut scratch: Vec<F::Elem> = vec![self.field.zero(); rows];
        let mut touched: Vec<usize> = Vec::new();
        let mut cols = Vec::with_capacity(other.cols.len());
        for gcol in &other.cols {
            for (mid, gv) in gcol {
                for (r, fv) in &self.cols[*mid] {
                    let prod = self.field.mul(fv, gv);
                    if scratch[*r] == self.field.zero() && !self.field.is_zero(&prod) {
                        touched.push(*r);
                    }
                    scratch[*r] = self.field.add(&scratch[*r], &prod);
                }
            }
            touched.sort_unstable();
            let mut col = Vec::with_capacity(touched.len());
            for &r in &touched {
                let v = std::mem::replace(&mut scratch[r], self.field.zero());
                if !self.field.is_zero(&v) {
                    col.push((r, v));
                }
            }
            touched.clear();
            cols.push(col);
        }
        Ok(LinearMap {
            field: self.field.clone(),
            domain_dims: other.domain_dims.clone(),
            codomain_dims: self.codomain_dims.clone(),
            cols,
        })
    }

    /// Kronecker product with factor lists concatenated:
    /// `(f ⊗ g)(x ⊗ y) = f(x) ⊗ g(y)`.
    pub fn tensor(&self, other: &Self) -> Result<Self, Error> {
        self.check_field(other)?;
        let g_rows = other.codomain_total();
        let g_cols = other.cols.len();
        let mut domain_dims = self.domain_dims.clone();
        domain_dims.extend_from_slice(&other.domain_dims);
        let mut codomain_dims = self.codomain_dims.clone();
        codomain_dims.extend_from_slice(&other.codomain_dims);
        let mut cols = Vec::with_capacity(self.cols.len() * g_cols);
        for fcol in &self.cols {
            for gcol in &other.cols {
                let mut col = Vec::with_capacity(fcol.len() * gcol.len());
                for (fr, fv) in fcol {
                    for (gr, gv) in gcol {
                        col.push((fr * g_rows + gr, self.field.mul(fv, gv)));
                    }
                }
                cols.push(col);
            }
        }
        Ok(LinearMap {
            field: self.field.clone(),
            domain_dims,
            codomain_dims,
            cols,
        })
    }

    pub fn add(&self, other: &Self) -> Result<Self, Error> {
        self.combine(other, false)
    }

    pub fn sub(&self, other: &Self) -> Result<Self, Error> {
        self.combine(other, true)
    }

    fn combine(&self, other: &Self, negate: bool) -> Result<Self, Error> {
        self.check_field(other)?;
        if self.domain_total() != other.domain_total()
            || self.codomain_total() != other.codomain_total()
        {
            return Err(Error::DimMismatch {
                context: "add",
                expected: self.domain_total(),
                found: other.domain_total(),
            });
        }
        let mut cols = Vec::with_capacity(self.cols.len());
        for (a, b) in self.cols.iter().zip(&other.cols) {
            let mut col: Vec<(usize, F::Elem)> = Vec::with_capacity(a.len() + b.len());
            col.extend(a.iter().cloned());
            for (r, v) in b {
                col.push((*r, if negate { self.field.neg(v) } else { v.clone() }));
            }
            canonicalize(&self.field, &mut col);
            cols.push(col);
        }
        Ok(LinearMap {
            field: self.field.clone(),
            domain_dims: self.domain_dims.clone(),
            codomain_dims: self.codomain_dims.clone(),
            cols,
        })
    }

    pub fn scale(&self, k: &F::Elem) -> Self {
        let mut out = self.clone();
        if self.field.is_zero(k) {
            for col in out.cols.iter_mut() {
                col.clear();
            }
            return out;
        }
        for col in out.cols.iter_mut() {
            for (_, v) in col.iter_mut() {
                *v = self.field.mul(v, k);
            }
        }
        out
    }

    pub fn neg(&self) -> Self {
        self.scale(&self.field.from_int(-1))
    }

    /// Apply to a coefficient vector of length `domain_total`.
    pub fn apply(&self, vec: &[F::Elem]) -> Vec<F::Elem> {
        let mut out = vec![self.field.zero(); self.codomain_total()];
        for (c, col) in self.cols.iter().enumerate() {
            if self.field.is_zero(&vec[c]) {
                continue;
            }
            for (r, v) in col {
                let prod = self.field.mul(v, &vec[c]);
                out[*r] = self.field.add(&out[*r], &prod);
            }
        }
        out
    }

    /// Exact two-sided inverse by Gaussian elimination, or
    /// [`Error::NotInvertible`] for singular input.
    pub fn invert(&self) -> Result<Self, Error> {
        let n = self.domain_total();
        if n != self.codomain_total() {
            return Err(Error::DimMismatch {
                context: "invert",
                expected: n,
                found: self.codomain_total(),
            });
        }
        let f = &self.field;
        let mut a = self.to_dense();
        let mut inv: Vec<Vec<F::Elem>> = (0..n)
            .map(|r| {
                (0..n)
                    .map(|c| if r == c { f.one() } else { f.zero() })
                    .collect()
            })
            .collect();
        for col in 0..n {
            let pivot = (col..n)
                .find(|&r| !f.is_zero(&a[r][col]))
                .ok_or(Error::NotInvertible)?;
            a.swap(col, pivot);
            inv.swap(col, pivot);
            let pinv = f.inv(&a[col][col]).expect("nonzero pivot");
            for c in 0..n {
                a[col][c] = f.mul(&a[col][c], &pinv);
                inv[col][c] = f.mul(&inv[col][c], &pinv);
            }
            for r in 0..n {
                if r != col && !f.is_zero(&a[r][col]) {
                    let factor = a[r][col].clone();
                    for c in 0..n {
                        let t = f.mul(&factor, &a[col][c]);
                        a[r][c] = f.sub(&a[r][c], &t);
                        let t = f.mul(&factor, &inv[col][c]);
                        inv[r][c] = f.sub(&inv[r][c], &t);
                    }
                }
            }
        }
        Self::from_rows(
            f.clone(),
            self.domain_dims.clone(),
            self.codomain_dims.clone(),
            &inv,
        )
    }

    /// Solve `self · x = rhs` column by column. Returns `Ok(None)` when the
    /// system is inconsistent. When the solution space is positive-dimensional
    /// the free coordinates are set to zero.
    pub fn solve(&self, rhs: &Self) -> Result<Option<Self>, Error> {
        self.check_field(rhs)?;
        if self.codomain_total() != rhs.codomain_total() {
            return Err(Error::DimMismatch {
                context: "solve",
                expected: self.codomain_total(),
                found: rhs.codomain_total(),
            });
        }
        let f = &self.field;
        let m = self.codomain_total();
        let n = self.domain_total();
        let k = rhs.domain_total();
        // Augmented matrix [A | rhs], reduced to row echelon form.
        let mut a = self.to_dense();
        let dense_rhs = rhs.to_dense();
        for (row, extra) in a.iter_mut().zip(&dense_rhs) {
            row.extend(extra.iter().cloned());
        }
        let mut pivot_of_col: Vec<Option<usize>> = vec![None; n];
        let mut rank = 0usize;
        for col in 0..n {
            let Some(pivot) = (rank..m).find(|&r| !f.is_zero(&a[r][col])) else {
                continue;
            };
            a.swap(rank, pivot);
            let pinv = f.inv(&a[rank][col]).expect("nonzero pivot");
            for c in 0..(n + k) {
                a[rank][c] = f.mul(&a[rank][c], &pinv);
            }
            for r in 0..m {
                if r != rank && !f.is_zero(&a[r][col]) {
                    let factor = a[r][col].clone();
                    for c in 0..(n + k) {
                        let t = f.mul(&factor, &a[rank][c]);
                        a[r][c] = f.sub(&a[r][c], &t);
                    }
                }
            }
            pivot_of_col[col] = Some(rank);
            rank += 1;
        }
        // Inconsistent iff a zero row of A has a nonzero rhs entry.
        for r in rank..m {
            if (0..k).any(|c| !f.is_zero(&a[r][n + c])) {
                return Ok(None);
            }
        }
        let mut triplets = Vec::new();
        for (col, pivot) in pivot_of_col.iter().enumerate() {
            if let Some(r) = pivot {
                for c in 0..k {
                    let v = a[*r][n + c].clone();
                    if !f.is_zero(&v) {
                        triplets.push((col, c, v));
                    }
                }
            }
        }
        Ok(Some(Self::from_triplets(
            f.clone(),
            self.domain_dims.clone(),
            rhs.domain_dims.clone(),
            triplets,
        )?))
    }

    /// Basis of the kernel, as columns of a single map `K` with
    /// `self ∘ K = 0` and rank(K) = dim ker.
    pub fn kernel_basis(&self) -> Vec<Vec<F::Elem>> {
        let f = &self.field;
        let m = self.codomain_total();
        let n = self.domain_total();
        let mut a = self.to_dense();
        let mut pivot_of_col: Vec<Option<usize>> = vec![None; n];
        let mut rank = 0usize;
        for col in 0..n {
            let Some(pivot) = (rank..m).find(|&r| !f.is_zero(&a[r][col])) else {
                continue;
            };
            a.swap(rank, pivot);
            let pinv = f.inv(&a[rank][col]).expect("nonzero pivot");
            for c in 0..n {
                a[rank][c] = f.mul(&a[rank][c], &pinv);
            }
            for r in 0..m {
                if r != rank && !f.is_zero(&a[r][col]) {
                    let factor = a[r][col].clone();
                    for c in 0..n {
                        let t = f.mul(&factor, &a[rank][c]);
                        a[r][c] = f.sub(&a[r][c], &t);
                    }
                }
            }
            pivot_of_col[col] = Some(rank);
            rank += 1;
        }
        let mut basis = Vec::new();
        for free in 0..n {
            if pivot_of_col[free].is_some() {
                continue;
            }
            let mut v = vec![f.zero(); n];
            v[free] = f.one();
            for col in 0..n {
                if let Some(r) = pivot_of_col[col] {
                    v[col] = f.neg(&a[r][free]);
                }
            }
            basis.push(v);
        }
        basis
    }
}

fn canonicalize<F: Field>(field: &F, col: &mut Vec<(usize, F::Elem)>) {
    col.sort_by_key(|(r, _)| *r);
    let mut out: Vec<(usize, F::Elem)> = Vec::with_capacity(col.len());
    for (r, v) in col.drain(..) {
        match out.last_mut() {
            Some((lr, lv)) if *lr == r => {
                *lv = field.add(lv, &v);
            }
            _ => out.push((r, v)),
        }
    }
    out.retain(|(_, v)| !field.is_zero(v));
    *col = out;
}

/// The basis-permutation map sending `e_{i_1} ⊗ … ⊗ e_{i_k}` to the pure
/// tensor with factor `s` moved to position `perm[s]`.
pub fn permute_factors<F: Field>(
    field: F,
    dims: &[usize],
    perm: &[usize],
) -> Result<LinearMap<F>, Error> {
    if perm.len() != dims.len() {
        return Err(Error::BadPermutation(format!(
            "permutation length {} does not match {} factors",
            perm.len(),
            dims.len()
        )));
    }
    let k = dims.len();
    let mut seen = vec![false; k];
    for &t in perm {
        if t >= k || seen[t] {
            return Err(Error::BadPermutation(format!(
                "{perm:?} is not a permutation"
            )));
        }
        seen[t] = true;
    }
    let mut codomain_dims = vec![0usize; k];
    for s in 0..k {
        codomain_dims[perm[s]] = dims[s];
    }
    let out_strides = strides(&codomain_dims);
    let n = total(dims);
    let one = field.one();
    let mut cols = Vec::with_capacity(n);
    let mut index = vec![0usize; k];
    for _ in 0..n {
        let mut row = 0usize;
        for s in 0..k {
            row += index[s] * out_strides[perm[s]];
        }
        cols.push(vec![(row, one.clone())]);
        // lexicographic increment, last factor fastest
        for s in (0..k).rev() {
            index[s] += 1;
            if index[s] < dims[s] {
                break;
            }
            index[s] = 0;
        }
    }
    Ok(LinearMap {
        field,
        domain_dims: dims.to_vec(),
        codomain_dims,
        cols,
    })
}

/// The symmetry `c_{X,Y}: X ⊗ Y → Y ⊗ X` on spaces of dimensions `m`, `n`.
pub fn flip<F: Field>(field: F, m: usize, n: usize) -> LinearMap<F> {
    permute_factors(field, &[m, n], &[1, 0]).expect("two-factor swap is a permutation")
}

pub fn strides(dims: &[usize]) -> Vec<usize> {
    let mut s = vec![1usize; dims.len()];
    for i in (0..dims.len().saturating_sub(1)).rev() {
        s[i] = s[i + 1] * dims[i + 1];
    }
    s
}

/// Compose a chain written in application order: `compose_chain([f, g, h]) =
/// f ∘ g ∘ h` (apply `h` first).
pub fn compose_chain<F: Field>(maps: &[&LinearMap<F>]) -> Result<LinearMap<F>, Error> {
    let (last, rest) = maps
        .split_last()
        .ok_or(Error::Invalid("empty composition".into()))?;
    let mut acc = (*last).clone();
    for f in rest.iter().rev() {
        acc = f.compose(&acc)?;
    }
    Ok(acc)
}

/// Tensor a list of maps left to right.
pub fn tensor_chain<F: Field>(maps: &[&LinearMap<F>]) -> Result<LinearMap<F>, Error> {
    let (first, rest) = maps
        .split_first()
        .ok_or(Error::Invalid("empty tensor".into()))?;
    let mut acc = (*first).clone();
    for f in rest {
        acc = acc.tensor(f)?;
    }
    Ok(acc)
}

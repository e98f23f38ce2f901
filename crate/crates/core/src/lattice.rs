//! Integer lattices `L` with `D·Z^k ⊆ L ⊆ Z^k` in canonical Hermite form,
//! and Smith-form subquotients `B/A` of such lattices.
//!
//! The moduli `d` are passed to every operation rather than stored, so a
//! lattice costs `k²` words. All reductions keep entries below `2^62`, which
//! makes every intermediate product fit in `i128`.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::arith;

/// Upper-triangular Hermite basis: row `i` has pivot `h_i | d_i` in column
/// `i`, and column `j` holds values in `[0, h_j)` above its pivot.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Hnf {
    k: usize,
    m: Vec<u64>,
}

fn reduce(x: i128, n: u64) -> u64 {
    x.rem_euclid(n as i128) as u64
}

impl Hnf {
    /// `D·Z^k`.
    pub fn relations(d: &[u64]) -> Hnf {
        let k = d.len();
        let mut m = vec![0u64; k * k];
        for (i, &di) in d.iter().enumerate() {
            m[i * k + i] = di;
        }
        Hnf { k, m }
    }

    /// `Z^k`.
    pub fn full(k: usize) -> Hnf {
        let mut m = vec![0u64; k * k];
        for i in 0..k {
            m[i * k + i] = 1;
        }
        Hnf { k, m }
    }

    pub fn from_generators<V: AsRef<[i128]>>(d: &[u64], gens: &[V]) -> Hnf {
        let mut work = Work::new(d, &Hnf::relations(d));
        for g in gens {
            work.insert(g.as_ref());
        }
        work.finish()
    }

    pub fn from_u64_generators<V: AsRef<[u64]>>(d: &[u64], gens: &[V]) -> Hnf {
        let mut work = Work::new(d, &Hnf::relations(d));
        for g in gens {
            let v: Vec<i128> = g.as_ref().iter().map(|&x| x as i128).collect();
            work.insert(&v);
        }
        work.finish()
    }

    pub fn dim(&self) -> usize {
        self.k
    }

    pub fn pivot(&self, i: usize) -> u64 {
        self.m[i * self.k + i]
    }

    pub fn row(&self, i: usize) -> &[u64] {
        &self.m[i * self.k..(i + 1) * self.k]
    }

    pub fn rows(&self) -> impl Iterator<Item = &[u64]> {
        (0..self.k).map(move |i| self.row(i))
    }

    pub fn is_full(&self) -> bool {
        (0..self.k).all(|i| self.pivot(i) == 1)
    }

    pub fn is_relations(&self, d: &[u64]) -> bool {
        (0..self.k).all(|i| self.pivot(i) == d[i])
    }

    /// `|L / D·Z^k|`.
    pub fn order(&self, d: &[u64]) -> u128 {
        (0..self.k).map(|i| (d[i] / self.pivot(i)) as u128).product()
    }

    pub fn contains(&self, d: &[u64], v: &[i128]) -> bool {
        let mut cur: Vec<i128> = v.iter().zip(d).map(|(&x, &n)| reduce(x, n) as i128).collect();
        for i in 0..self.k {
            let h = self.pivot(i) as i128;
            if cur[i] % h != 0 {
                return false;
            }
            let q = cur[i] / h;
            if q != 0 {
                let row = self.row(i);
                for j in i..self.k {
                    cur[j] = reduce(cur[j] - q * row[j] as i128, d[j]) as i128;
                }
            }
        }
        true
    }

    pub fn contains_u64(&self, d: &[u64], v: &[u64]) -> bool {
        let w: Vec<i128> = v.iter().map(|&x| x as i128).collect();
        self.contains(d, &w)
    }

    pub fn is_subset(&self, d: &[u64], other: &Hnf) -> bool {
        self.rows().all(|r| other.contains_u64(d, r))
    }

    pub fn sum(&self, d: &[u64], other: &Hnf) -> Hnf {
        let mut work = Work::new(d, self);
        for r in other.rows() {
            let v: Vec<i128> = r.iter().map(|&x| x as i128).collect();
            work.insert(&v);
        }
        work.finish()
    }

    pub fn intersect(&self, d: &[u64], other: &Hnf) -> Hnf {
        let k = self.k;
        let dd: Vec<u64> = d.iter().chain(d).copied().collect();
        let mut gens: Vec<Vec<i128>> = Vec::with_capacity(2 * k);
        for r in self.rows() {
            gens.push(r.iter().chain(r).map(|&x| x as i128).collect());
        }
        for r in other.rows() {
            gens.push(r.iter().map(|&x| x as i128).chain(std::iter::repeat_n(0, k)).collect());
        }
        Hnf::from_generators(&dd, &gens).lower_block(k)
    }

    /// `c·L + D·Z^k`.
    pub fn scaled(&self, d: &[u64], c: u64) -> Hnf {
        let gens: Vec<Vec<i128>> = self
            .rows()
            .map(|r| r.iter().map(|&x| x as i128 * c as i128).collect())
            .collect();
        Hnf::from_generators(d, &gens)
    }

    /// `{x : c·x ∈ L}`.
    pub fn preimage_scalar(&self, d: &[u64], c: u64) -> Hnf {
        let k = self.k;
        let dd: Vec<u64> = d.iter().chain(d).copied().collect();
        let mut gens: Vec<Vec<i128>> = Vec::with_capacity(2 * k);
        for i in 0..k {
            let mut v = vec![0i128; 2 * k];
            v[i] = c as i128;
            v[k + i] = 1;
            gens.push(v);
        }
        for r in self.rows() {
            gens.push(r.iter().map(|&x| x as i128).chain(std::iter::repeat_n(0, k)).collect());
        }
        Hnf::from_generators(&dd, &gens).lower_block(k)
    }

    /// Bottom-right `k×k` block of a `2k`-dimensional form.
    fn lower_block(&self, k: usize) -> Hnf {
        let n = self.k;
        let mut m = vec![0u64; k * k];
        for i in 0..k {
            for j in 0..k {
                m[i * k + j] = self.m[(k + i) * n + k + j];
            }
        }
        Hnf { k, m }
    }

    /// Least `c > 0` with `c·v ∈ L`.
    pub fn order_of(&self, d: &[u64], v: &[i128]) -> u64 {
        let mut cur: Vec<i128> = v.iter().zip(d).map(|(&x, &n)| reduce(x, n) as i128).collect();
        let mut c: u64 = 1;
        for i in 0..self.k {
            let h = self.pivot(i);
            let t = h / arith::gcd(h, cur[i] as u64);
            if t > 1 {
                c *= t;
                for j in i..self.k {
                    cur[j] = reduce(cur[j] * t as i128, d[j]) as i128;
                }
            }
            let q = cur[i] / h as i128;
            if q != 0 {
                let row = self.row(i);
                for j in i..self.k {
                    cur[j] = reduce(cur[j] - q * row[j] as i128, d[j]) as i128;
                }
            }
        }
        c
    }

    /// Least `c > 0` with `c·sub ⊆ L`.
    pub fn conductor(&self, d: &[u64], sub: &Hnf) -> u64 {
        sub.rows().fold(1u64, |acc, r| {
            let v: Vec<i128> = r.iter().map(|&x| x as i128).collect();
            arith::lcm(acc, self.order_of(d, &v)).expect("divides the exponent")
        })
    }

    /// Representatives of `L / D·Z^k`, each reduced mod `d`. The mixed-radix
    /// coefficient order makes the listing deterministic.
    pub fn elements(&self, d: &[u64]) -> Vec<Vec<u64>> {
        let k = self.k;
        let radix: Vec<u64> = (0..k).map(|i| d[i] / self.pivot(i)).collect();
        let total: u128 = radix.iter().map(|&r| r as u128).product();
        let mut out = Vec::with_capacity(total as usize);
        let mut coef = vec![0u64; k];
        loop {
            let mut v = vec![0i128; k];
            for (i, &c) in coef.iter().enumerate() {
                if c == 0 {
                    continue;
                }
                for (j, x) in self.row(i).iter().enumerate().skip(i) {
                    v[j] = reduce(v[j] + c as i128 * *x as i128, d[j]) as i128;
                }
            }
            out.push(v.into_iter().map(|x| x as u64).collect());
            let mut i = k;
            loop {
                if i == 0 {
                    return out;
                }
                i -= 1;
                coef[i] += 1;
                if coef[i] < radix[i] {
                    break;
                }
                coef[i] = 0;
            }
        }
    }

    /// Rows that are nonzero modulo `D`, i.e. a generating set of `L/D·Z^k`.
    pub fn generators(&self, d: &[u64]) -> Vec<Vec<u64>> {
        (0..self.k)
            .filter(|&i| self.pivot(i) != d[i] || self.row(i).iter().skip(i + 1).any(|&x| x != 0))
            .map(|i| self.row(i).to_vec())
            .filter(|r| r.iter().zip(d).any(|(&x, &n)| x % n != 0))
            .collect()
    }
}

/// Mutable working basis used while inserting generators.
struct Work<'a> {
    d: &'a [u64],
    k: usize,
    m: Vec<i128>,
}

impl<'a> Work<'a> {
    fn new(d: &'a [u64], start: &Hnf) -> Work<'a> {
        Work { d, k: start.k, m: start.m.iter().map(|&x| x as i128).collect() }
    }

    fn insert(&mut self, v: &[i128]) {
        let (k, d) = (self.k, self.d);
        let mut v: Vec<i128> = v.iter().zip(d).map(|(&x, &n)| reduce(x, n) as i128).collect();
        for i in 0..k {
            if v[i] == 0 {
                continue;
            }
            let h = self.m[i * k + i];
            if v[i] % h == 0 {
                let q = v[i] / h;
                for j in i..k {
                    v[j] = reduce(v[j] - q * self.m[i * k + j], d[j]) as i128;
                }
                continue;
            }
            let (g, x, y) = arith::egcd(h, v[i]);
            let (a, b) = (v[i] / g, h / g);
            for j in i..k {
                let hij = self.m[i * k + j];
                let vj = v[j];
                let top = if j == i { g } else { reduce(x * hij + y * vj, d[j]) as i128 };
                v[j] = reduce(a * hij - b * vj, d[j]) as i128;
                self.m[i * k + j] = top;
            }
            debug_assert_eq!(v[i], 0);
        }
    }

    fn finish(mut self) -> Hnf {
        let (k, d) = (self.k, self.d);
        for j in 0..k {
            let h = self.m[j * k + j];
            for r in 0..j {
                let q = self.m[r * k + j].div_euclid(h);
                if q != 0 {
                    for c in j..k {
                        self.m[r * k + c] = reduce(self.m[r * k + c] - q * self.m[j * k + c], d[c]) as i128;
                    }
                }
                // columns after j are reduced mod d; column j mod its pivot
                self.m[r * k + j] = self.m[r * k + j].rem_euclid(h);
            }
        }
        Hnf { k, m: self.m.into_iter().map(|x| x as u64).collect() }
    }
}

/// Smith normal form of a square integer matrix, returning the diagonal and
/// the column transform `V` together with its inverse (`U·A·V = diag`).
pub fn smith(a: &[Vec<BigInt>]) -> (Vec<BigInt>, Vec<Vec<BigInt>>, Vec<Vec<BigInt>>) {
    let m = a.len();
    let n = if m == 0 { 0 } else { a[0].len() };
    let mut a: Vec<Vec<BigInt>> = a.to_vec();
    let ident = |n: usize| -> Vec<Vec<BigInt>> {
        (0..n)
            .map(|i| (0..n).map(|j| if i == j { BigInt::one() } else { BigInt::zero() }).collect())
            .collect()
    };
    let mut v = ident(n);
    let mut vinv = ident(n);
    let steps = m.min(n);
    for t in 0..steps {
        loop {
            let mut best: Option<(usize, usize)> = None;
            for i in t..m {
                for j in t..n {
                    if !a[i][j].is_zero()
                        && best.is_none_or(|(bi, bj)| a[i][j].abs() < a[bi][bj].abs())
                    {
                        best = Some((i, j));
                    }
                }
            }
            let Some((pi, pj)) = best else {
                let diag = (0..steps).map(|i| a[i][i].clone()).collect();
                return (diag, v, vinv);
            };
            a.swap(t, pi);
            if pj != t {
                for row in a.iter_mut() {
                    row.swap(t, pj);
                }
                for row in v.iter_mut() {
                    row.swap(t, pj);
                }
                vinv.swap(t, pj);
            }
            if a[t][t].is_negative() {
                for x in a[t].iter_mut() {
                    *x = -x.clone();
                }
            }
            let p = a[t][t].clone();
            let mut clean = true;
            for i in t + 1..m {
                let q = a[i][t].div_floor(&p);
                if !q.is_zero() {
                    for j in t..n {
                        let delta = &q * &a[t][j];
                        a[i][j] -= delta;
                    }
                }
                clean &= a[i][t].is_zero();
            }
            for j in t + 1..n {
                let q = a[t][j].div_floor(&p);
                if !q.is_zero() {
                    for i in t..m {
                        let delta = &q * &a[i][t];
                        a[i][j] -= delta;
                    }
                    for row in v.iter_mut() {
                        let delta = &q * &row[t];
                        row[j] -= delta;
                    }
                    for c in 0..n {
                        let delta = &q * &vinv[j][c];
                        vinv[t][c] += delta;
                    }
                }
                clean &= a[t][j].is_zero();
            }
            if !clean {
                continue;
            }
            let offending = (t + 1..m).find(|&i| (t + 1..n).any(|j| !(&a[i][j] % &p).is_zero()));
            match offending {
                Some(i) => {
                    for j in t..n {
                        let x = a[i][j].clone();
                        a[t][j] += x;
                    }
                }
                None => break,
            }
        }
    }
    let diag = (0..steps).map(|i| a[i][i].clone()).collect();
    (diag, v, vinv)
}

/// `B/A` for lattices `D·Z^k ⊆ A ⊆ B ⊆ Z^k`, presented as `⊕ Z/e_i` with
/// maps between ambient vectors and quotient coordinates.
#[derive(Clone, Debug)]
pub struct Subquotient {
    k: usize,
    factors: Vec<u64>,
    kept: Vec<usize>,
    dropped: Vec<usize>,
    b_basis: Vec<Vec<BigInt>>,
    v: Vec<Vec<BigInt>>,
    lift_rows: Vec<Vec<BigInt>>,
}

fn to_big(h: &Hnf) -> Vec<Vec<BigInt>> {
    h.rows().map(|r| r.iter().map(|&x| BigInt::from(x)).collect()).collect()
}

/// Coordinates `c` with `x = c·B` for an upper-triangular full-rank `B`.
fn solve_upper(b: &[Vec<BigInt>], x: &[BigInt]) -> Option<Vec<BigInt>> {
    let k = b.len();
    let mut cur = x.to_vec();
    let mut c = vec![BigInt::zero(); k];
    for i in 0..k {
        let (q, r) = cur[i].div_rem(&b[i][i]);
        if !r.is_zero() {
            return None;
        }
        for j in i..k {
            let delta = &q * &b[i][j];
            cur[j] -= delta;
        }
        c[i] = q;
    }
    Some(c)
}

impl Subquotient {
    pub fn new(b: &Hnf, a: &Hnf) -> Subquotient {
        let k = b.dim();
        let b_basis = to_big(b);
        let x: Vec<Vec<BigInt>> = to_big(a)
            .iter()
            .map(|row| solve_upper(&b_basis, row).expect("A ⊆ B"))
            .collect();
        let (diag, v, vinv) = smith(&x);
        let mut factors = Vec::new();
        let mut kept = Vec::new();
        let mut dropped = Vec::new();
        for (i, e) in diag.iter().enumerate() {
            let e = e.abs().to_u64().expect("factor divides a modulus");
            if e > 1 {
                factors.push(e);
                kept.push(i);
            } else {
                dropped.push(i);
            }
        }
        let lift_rows: Vec<Vec<BigInt>> = vinv
            .iter()
            .map(|row| {
                (0..k)
                    .map(|j| (0..k).map(|t| &row[t] * &b_basis[t][j]).sum())
                    .collect()
            })
            .collect();
        Subquotient { k, factors, kept, dropped, b_basis, v, lift_rows }
    }

    /// Invariant factors of `B/A` (each `> 1`, dividing the next).
    pub fn factors(&self) -> &[u64] {
        &self.factors
    }

    /// Quotient coordinates of a vector of `B`.
    pub fn project(&self, x: &[u64]) -> Vec<u64> {
        let xb: Vec<BigInt> = x.iter().map(|&v| BigInt::from(v)).collect();
        let c = solve_upper(&self.b_basis, &xb).expect("vector lies in B");
        self.kept
            .iter()
            .zip(&self.factors)
            .map(|(&t, &e)| {
                let y: BigInt = (0..self.k).map(|i| &c[i] * &self.v[i][t]).sum();
                arith::big_mod(&y, e)
            })
            .collect()
    }

    /// An ambient vector of `B` whose image has the given coordinates,
    /// reduced modulo `d`.
    pub fn lift(&self, y: &[u64], d: &[u64]) -> Vec<u64> {
        let mut out = vec![BigInt::zero(); self.k];
        for (&t, &yt) in self.kept.iter().zip(y) {
            for (o, l) in out.iter_mut().zip(&self.lift_rows[t]) {
                *o += l * BigInt::from(yt);
            }
        }
        out.iter().zip(d).map(|(x, &n)| arith::big_mod(x, n)).collect()
    }

    /// Generators (ambient, reduced mod `d`) of the preimage in `B` of a
    /// quotient lattice given by its rows; `A` itself is added by the caller.
    pub fn lift_generators(&self, rows: &[Vec<u64>], d: &[u64]) -> Vec<Vec<u64>> {
        let mut out: Vec<Vec<u64>> = rows.iter().map(|r| self.lift(r, d)).collect();
        for &t in &self.dropped {
            out.push(self.lift_rows[t].iter().zip(d).map(|(x, &n)| arith::big_mod(x, n)).collect());
        }
        out
    }
}

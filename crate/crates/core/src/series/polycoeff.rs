use std::fmt;

use super::TruncSeries;
use crate::error::{Error, Result};
use crate::ring::{binomial, ri, Rat, Ring};

/// Dense polynomial in `x` (negative exponents allowed) and `y` (nonnegative).
///
/// Storage is a box `[x_lo, x_lo + nx) x [0, ny)` in row-major order by `x`.
/// Equality is semantic: boxes of different shape holding the same nonzero
/// coefficients compare equal.
#[derive(Clone)]
pub struct XyPoly<R: Ring> {
    x_lo: i32,
    nx: usize,
    ny: usize,
    data: Vec<R>,
}

impl<R: Ring> XyPoly<R> {
    pub fn zero() -> Self {
        Self { x_lo: 0, nx: 0, ny: 0, data: Vec::new() }
    }

    pub fn constant(c: R) -> Self {
        let mut p = Self::with_box(0, 0, 1);
        p.data[0] = c;
        p
    }

    /// Zero polynomial with room for `x_lo <= x <= x_hi`, `0 <= y < ny`.
    pub fn with_box(x_lo: i32, x_hi: i32, ny: usize) -> Self {
        if x_hi < x_lo || ny == 0 {
            return Self::zero();
        }
        let nx = (x_hi - x_lo + 1) as usize;
        Self { x_lo, nx, ny, data: vec![R::zero(); nx * ny] }
    }

    /// Polynomial in `x` alone from coefficients of `x^0, x^1, ...`.
    pub fn from_x_coeffs(coeffs: Vec<R>) -> Self {
        let nx = coeffs.len();
        Self { x_lo: 0, nx, ny: if nx == 0 { 0 } else { 1 }, data: coeffs }
    }

    fn index(&self, x: i32, y: usize) -> Option<usize> {
        if x < self.x_lo || y >= self.ny {
            return None;
        }
        let i = (x - self.x_lo) as usize;
        (i < self.nx).then_some(i * self.ny + y)
    }

    pub fn get(&self, x: i32, y: usize) -> Option<&R> {
        self.index(x, y).map(|i| &self.data[i])
    }

    pub fn coeff(&self, x: i32, y: usize) -> R {
        self.get(x, y).cloned().unwrap_or_else(R::zero)
    }

    /// Grows the storage box so that `(x, y)` is addressable.
    fn reserve(&mut self, x: i32, y: usize) {
        if self.index(x, y).is_some() {
            return;
        }
        let (lo, hi) = if self.nx == 0 {
            (x, x)
        } else {
            (self.x_lo.min(x), (self.x_lo + self.nx as i32 - 1).max(x))
        };
        let ny = self.ny.max(y + 1);
        let mut grown = Self::with_box(lo, hi, ny);
        for (xx, yy, c) in self.iter_nonzero() {
            let i = grown.index(xx, yy).unwrap();
            grown.data[i] = c.clone();
        }
        *self = grown;
    }

    pub fn add_at(&mut self, x: i32, y: usize, c: &R) {
        if c.is_zero() {
            return;
        }
        self.reserve(x, y);
        let i = self.index(x, y).unwrap();
        self.data[i].add_assign_ref(c);
    }

    pub fn set(&mut self, x: i32, y: usize, c: R) {
        if c.is_zero() && self.index(x, y).is_none() {
            return;
        }
        self.reserve(x, y);
        let i = self.index(x, y).unwrap();
        self.data[i] = c;
    }

    fn add_mul_at(&mut self, x: i32, y: usize, a: &R, b: &R) {
        let i = self.index(x, y).expect("product box preallocated");
        self.data[i].add_mul_assign(a, b);
    }

    pub fn iter_nonzero(&self) -> impl Iterator<Item = (i32, usize, &R)> + '_ {
        self.data.iter().enumerate().filter(|(_, c)| !c.is_zero()).map(move |(i, c)| {
            (self.x_lo + (i / self.ny) as i32, i % self.ny, c)
        })
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(R::is_zero)
    }

    /// `(min x, max x)` over nonzero coefficients.
    pub fn x_range(&self) -> Option<(i32, i32)> {
        self.iter_nonzero().fold(None, |acc, (x, _, _)| match acc {
            None => Some((x, x)),
            Some((lo, hi)) => Some((lo.min(x), hi.max(x))),
        })
    }

    /// Largest `y` exponent over nonzero coefficients.
    pub fn y_max(&self) -> Option<usize> {
        self.iter_nonzero().map(|(_, y, _)| y).max()
    }

    /// Largest total degree `x + y` (for polynomials with `x >= 0`).
    pub fn total_degree(&self) -> Option<usize> {
        self.iter_nonzero().map(|(x, y, _)| (x.max(0) as usize) + y).max()
    }

    pub fn map(&self, f: impl Fn(&R) -> R) -> Self {
        Self { x_lo: self.x_lo, nx: self.nx, ny: self.ny, data: self.data.iter().map(f).collect() }
    }

    /// Swaps the roles of `x` and `y` (both must be nonnegative).
    pub fn transpose(&self) -> Self {
        let mut out = Self::zero();
        for (x, y, c) in self.iter_nonzero() {
            assert!(x >= 0, "transpose needs nonnegative x exponents");
            out.set(y as i32, x as usize, c.clone());
        }
        out
    }

    pub fn add(&self, rhs: &Self) -> Self {
        let mut out = self.clone();
        for (x, y, c) in rhs.iter_nonzero() {
            out.add_at(x, y, c);
        }
        out
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        let mut out = self.clone();
        for (x, y, c) in rhs.iter_nonzero() {
            out.add_at(x, y, &c.neg_ref());
        }
        out
    }
}

impl<R: Ring> PartialEq for XyPoly<R> {
    fn eq(&self, other: &Self) -> bool {
        self.iter_nonzero().all(|(x, y, c)| other.coeff(x, y) == *c)
            && other.iter_nonzero().all(|(x, y, c)| self.coeff(x, y) == *c)
    }
}

impl<R: Ring> fmt::Debug for XyPoly<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut m = f.debug_map();
        for (x, y, c) in self.iter_nonzero() {
            m.entry(&format_args!("x^{x} y^{y}"), &format_args!("{c}"));
        }
        m.finish()
    }
}

/// Per-`t`-order admissible range of `x` exponents, `lo(k) <= x <= hi(k)`,
/// each an affine function of the order `k`.
///
/// A strict bound reports coefficients outside the range as
/// [`Error::DegreeOverflow`]; a truncating bound drops them silently (the
/// coefficient is a genuine power series in `x` cut at a working degree).
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct XBound {
    pub lo: (i64, i64),
    pub hi: (i64, i64),
    pub strict: bool,
}

impl XBound {
    const WIDE: i64 = 1 << 20;

    pub fn none() -> Self {
        Self { lo: (-Self::WIDE, 0), hi: (Self::WIDE, 0), strict: false }
    }

    /// Polynomial coefficients of degree at most `base + slope * k`, checked.
    pub fn poly(base: i64, slope: i64) -> Self {
        Self { lo: (0, 0), hi: (base, slope), strict: true }
    }

    /// Power-series coefficients in `x`, truncated above `base + slope * k`.
    pub fn series(base: i64, slope: i64) -> Self {
        Self { lo: (0, 0), hi: (base, slope), strict: false }
    }

    pub fn range(&self, k: usize) -> (i32, i32) {
        let k = k as i64;
        let clamp = |v: i64| v.clamp(-Self::WIDE, Self::WIDE) as i32;
        (clamp(self.lo.0 + self.lo.1 * k), clamp(self.hi.0 + self.hi.1 * k))
    }

    fn admit(&self, k: usize, x: i32) -> Result<bool> {
        let (lo, hi) = self.range(k);
        if (lo..=hi).contains(&x) {
            Ok(true)
        } else if self.strict {
            Err(Error::DegreeOverflow(format!("x^{x} at t^{k} outside [{lo}, {hi}]")))
        } else {
            Ok(false)
        }
    }
}

/// Truncated series in `t` whose coefficients are [`XyPoly`]s.
///
/// `y_order` is an optional truncation in `y` (exclusive); `None` means the
/// `y`-dependence is polynomial and never cut.
#[derive(Clone, Debug, PartialEq)]
pub struct PolyCoeffSeries<R: Ring> {
    coeffs: Vec<XyPoly<R>>,
    y_order: Option<usize>,
}

impl<R: Ring> PolyCoeffSeries<R> {
    pub fn zero(order: usize, y_order: Option<usize>) -> Self {
        Self { coeffs: vec![XyPoly::zero(); order], y_order }
    }

    pub fn one(order: usize, y_order: Option<usize>) -> Self {
        let mut s = Self::zero(order, y_order);
        if order > 0 && y_order != Some(0) {
            s.coeffs[0] = XyPoly::constant(R::one());
        }
        s
    }

    pub fn from_coeffs(coeffs: Vec<XyPoly<R>>, y_order: Option<usize>) -> Self {
        let mut s = Self { coeffs, y_order };
        s.clip_y();
        s
    }

    /// Lifts a series in `t` alone.
    pub fn from_t_series(s: &TruncSeries<R>, y_order: Option<usize>) -> Self {
        Self::from_coeffs(s.coeffs().iter().map(|c| XyPoly::constant(c.clone())).collect(), y_order)
    }

    fn clip_y(&mut self) {
        if let Some(ny) = self.y_order {
            for p in &mut self.coeffs {
                if p.y_max().is_some_and(|m| m >= ny) {
                    let mut q = XyPoly::zero();
                    for (x, y, c) in p.iter_nonzero().filter(|t| t.1 < ny) {
                        q.set(x, y, c.clone());
                    }
                    *p = q;
                }
            }
        }
    }

    pub fn order(&self) -> usize {
        self.coeffs.len()
    }

    pub fn y_order(&self) -> Option<usize> {
        self.y_order
    }

    pub fn coeffs(&self) -> &[XyPoly<R>] {
        &self.coeffs
    }

    pub fn at(&self, k: usize) -> &XyPoly<R> {
        &self.coeffs[k]
    }

    pub fn at_mut(&mut self, k: usize) -> &mut XyPoly<R> {
        &mut self.coeffs[k]
    }

    /// Coefficient of `t^k x^x y^y`.
    pub fn coeff(&self, k: usize, x: i32, y: usize) -> R {
        self.coeffs[k].coeff(x, y)
    }

    pub fn truncate(&self, order: usize) -> Self {
        Self { coeffs: self.coeffs.iter().take(order).cloned().collect(), y_order: self.y_order }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(XyPoly::is_zero)
    }

    fn join_y(a: Option<usize>, b: Option<usize>) -> Option<usize> {
        match (a, b) {
            (Some(a), Some(b)) => Some(a.min(b)),
            (a, None) => a,
            (None, b) => b,
        }
    }

    pub fn add(&self, rhs: &Self) -> Self {
        let n = self.order().min(rhs.order());
        Self::from_coeffs(
            (0..n).map(|k| self.coeffs[k].add(&rhs.coeffs[k])).collect(),
            Self::join_y(self.y_order, rhs.y_order),
        )
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        let n = self.order().min(rhs.order());
        Self::from_coeffs(
            (0..n).map(|k| self.coeffs[k].sub(&rhs.coeffs[k])).collect(),
            Self::join_y(self.y_order, rhs.y_order),
        )
    }

    pub fn scale(&self, r: &Rat) -> Self {
        Self { coeffs: self.coeffs.iter().map(|p| p.map(|c| c.scale(r))).collect(), y_order: self.y_order }
    }

    /// Truncated product with the `x` range of each output order limited by `bound`.
    pub fn mul(&self, rhs: &Self, bound: &XBound) -> Result<Self> {
        let n = self.order().min(rhs.order());
        let y_order = Self::join_y(self.y_order, rhs.y_order);
        let ycap = y_order.unwrap_or(usize::MAX);
        let terms = |s: &Self| -> Vec<Vec<(i32, usize, R)>> {
            s.coeffs
                .iter()
                .take(n)
                .map(|p| p.iter_nonzero().map(|(x, y, c)| (x, y, c.clone())).collect())
                .collect()
        };
        let (ta, tb) = (terms(self), terms(rhs));
        let extent = |t: &Vec<(i32, usize, R)>| {
            t.iter().fold(None, |acc: Option<(i32, i32, usize)>, (x, y, _)| match acc {
                None => Some((*x, *x, *y)),
                Some((lo, hi, ym)) => Some((lo.min(*x), hi.max(*x), ym.max(*y))),
            })
        };
        let (ea, eb): (Vec<_>, Vec<_>) = (ta.iter().map(extent).collect(), tb.iter().map(extent).collect());
        let mut out = Vec::with_capacity(n);
        for k in 0..n {
            // output box from operand extents, clipped to the bound
            let mut span: Option<(i32, i32, usize)> = None;
            for k1 in 0..=k {
                if let (Some(a), Some(b)) = (ea[k1], eb[k - k1]) {
                    let s = (a.0 + b.0, a.1 + b.1, a.2 + b.2);
                    span = Some(match span {
                        None => s,
                        Some(p) => (p.0.min(s.0), p.1.max(s.1), p.2.max(s.2)),
                    });
                }
            }
            let Some((lo, hi, ym)) = span else {
                out.push(XyPoly::zero());
                continue;
            };
            let (blo, bhi) = bound.range(k);
            let mut acc = XyPoly::with_box(lo.max(blo), hi.min(bhi), (ym + 1).min(ycap));
            for k1 in 0..=k {
                for (xa, ya, a) in &ta[k1] {
                    for (xb, yb, b) in &tb[k - k1] {
                        let y = ya + yb;
                        if y >= ycap {
                            continue;
                        }
                        let x = xa + xb;
                        if bound.admit(k, x)? {
                            acc.add_mul_at(x, y, a, b);
                        }
                    }
                }
            }
            out.push(acc);
        }
        Ok(Self { coeffs: out, y_order })
    }

    /// The coefficient of `y^l`, as a series in `t` and `x`.
    pub fn extract_y(&self, l: usize) -> Self {
        let coeffs = self
            .coeffs
            .iter()
            .map(|p| {
                let mut q = XyPoly::zero();
                for (x, y, c) in p.iter_nonzero() {
                    if y == l {
                        q.set(x, 0, c.clone());
                    }
                }
                q
            })
            .collect();
        Self { coeffs, y_order: None }
    }

    /// The coefficient of `x^m`, as a series in `t` and `y`.
    pub fn extract_x(&self, m: i32) -> Self {
        let coeffs = self
            .coeffs
            .iter()
            .map(|p| {
                let mut q = XyPoly::zero();
                for (x, y, c) in p.iter_nonzero() {
                    if x == m {
                        q.set(0, y, c.clone());
                    }
                }
                q
            })
            .collect();
        Self { coeffs, y_order: self.y_order }
    }

    /// Keeps the monomials whose `x` exponent is nonnegative.
    pub fn extract_x_nonneg(&self) -> Self {
        let coeffs = self
            .coeffs
            .iter()
            .map(|p| {
                let mut q = XyPoly::zero();
                for (x, y, c) in p.iter_nonzero() {
                    if x >= 0 {
                        q.set(x, y, c.clone());
                    }
                }
                q
            })
            .collect();
        Self { coeffs, y_order: self.y_order }
    }

    /// Collapses a series without `x` or `y` dependence to a plain series in `t`.
    pub fn to_t_series(&self) -> Result<TruncSeries<R>> {
        let mut out = Vec::with_capacity(self.order());
        for (k, p) in self.coeffs.iter().enumerate() {
            if let Some((x, y, _)) = p.iter_nonzero().find(|(x, y, _)| *x != 0 || *y != 0) {
                return Err(Error::BadParameter(format!("t^{k} has an x^{x} y^{y} term")));
            }
            out.push(p.coeff(0, 0));
        }
        Ok(TruncSeries::new(out))
    }

    /// Multiplies by `x^dx y^dy`.
    pub fn mul_monomial(&self, dx: i32, dy: usize) -> Self {
        let coeffs = self
            .coeffs
            .iter()
            .map(|p| {
                let mut q = XyPoly::zero();
                for (x, y, c) in p.iter_nonzero() {
                    q.set(x + dx, y + dy, c.clone());
                }
                q
            })
            .collect();
        Self::from_coeffs(coeffs, self.y_order)
    }

    /// Divides by `y`; the `y^0` part must vanish. The `y` truncation drops by one.
    pub fn div_y(&self) -> Result<Self> {
        let mut coeffs = Vec::with_capacity(self.order());
        for (k, p) in self.coeffs.iter().enumerate() {
            let mut q = XyPoly::zero();
            for (x, y, c) in p.iter_nonzero() {
                if y == 0 {
                    return Err(Error::InexactDivision(format!("y^0 term at t^{k} x^{x} in division by y")));
                }
                q.set(x, y - 1, c.clone());
            }
            coeffs.push(q);
        }
        Ok(Self { coeffs, y_order: self.y_order.map(|n| n.saturating_sub(1)) })
    }

    /// `x -> 1/(1 - x)`: each `x^m` becomes `sum_i C(m+i-1, i) x^i`, cut by `bound`.
    pub fn substitute_x_geometric(&self, bound: &XBound) -> Result<Self> {
        let mut coeffs = Vec::with_capacity(self.order());
        for (k, p) in self.coeffs.iter().enumerate() {
            let (_, hi) = bound.range(k);
            let mut q = XyPoly::with_box(0, hi, p.y_max().map_or(0, |m| m + 1));
            for (m, y, c) in p.iter_nonzero() {
                if m < 0 {
                    return Err(Error::BadParameter(format!("x^{m}: geometric substitution needs x >= 0")));
                }
                if m == 0 {
                    q.add_at(0, y, c);
                    continue;
                }
                for i in 0..=hi.max(-1) {
                    let b = binomial(m as i64 + i as i64 - 1, i as i64);
                    q.add_at(i, y, &c.scale(&b));
                }
            }
            coeffs.push(q);
        }
        Ok(Self { coeffs, y_order: self.y_order })
    }

    /// `x -> 1/x`
    pub fn substitute_x_inverse(&self) -> Self {
        let coeffs = self
            .coeffs
            .iter()
            .map(|p| {
                let mut q = XyPoly::zero();
                for (x, y, c) in p.iter_nonzero() {
                    q.set(-x, y, c.clone());
                }
                q
            })
            .collect();
        Self { coeffs, y_order: self.y_order }
    }

    /// `y -> t x` for a series without `x`: `t^k y^j` becomes `t^(k+j) x^j`.
    pub fn substitute_y_tx(&self) -> Result<Self> {
        let n = self.order();
        let mut coeffs = vec![XyPoly::zero(); n];
        for (k, p) in self.coeffs.iter().enumerate() {
            for (x, j, c) in p.iter_nonzero() {
                if x != 0 {
                    return Err(Error::BadParameter("y -> tx needs a series without x".into()));
                }
                if k + j < n {
                    coeffs[k + j].set(j as i32, 0, c.clone());
                }
            }
        }
        Ok(Self { coeffs, y_order: None })
    }

    /// `y -> y/t`: `t^k y^l` becomes `t^(k-l) y^l`. Every such term must have
    /// `k >= l`; the output is known to order `order - (y_order - 1)`.
    pub fn regrade_y_over_t(&self) -> Result<Self> {
        let ny = self
            .y_order
            .ok_or_else(|| Error::BadParameter("regrading needs a y truncation".into()))?;
        let n = self.order().saturating_sub(ny.saturating_sub(1));
        let mut coeffs = vec![XyPoly::zero(); n];
        for (k, p) in self.coeffs.iter().enumerate() {
            for (x, l, c) in p.iter_nonzero() {
                if l > k {
                    return Err(Error::InexactDivision(format!("t^{k} y^{l}: cannot regrade y -> y/t")));
                }
                if k - l < n {
                    coeffs[k - l].set(x, l, c.clone());
                }
            }
        }
        Ok(Self { coeffs, y_order: self.y_order })
    }

    /// Coefficient of `y^l` as a series in `t` and `x` (kept with `y` exponent 0).
    fn y_slices(&self, ny: usize) -> Vec<Self> {
        (0..ny).map(|l| self.extract_y(l)).collect()
    }

    fn from_y_slices(slices: &[Self], order: usize, y_order: Option<usize>) -> Self {
        let mut coeffs = vec![XyPoly::zero(); order];
        for (l, s) in slices.iter().enumerate() {
            for (k, p) in s.coeffs.iter().enumerate().take(order) {
                for (x, _, c) in p.iter_nonzero() {
                    coeffs[k].set(x, l, c.clone());
                }
            }
        }
        Self { coeffs, y_order }
    }

    fn require_y_order(&self, what: &str) -> Result<usize> {
        self.y_order.ok_or_else(|| Error::BadParameter(format!("{what} needs a y truncation")))
    }

    fn check_no_y0(&self, what: &str) -> Result<()> {
        for p in &self.coeffs {
            if p.iter_nonzero().any(|t| t.1 == 0) {
                return Err(Error::BadConstantTerm(match what {
                    "exp" => "exp_y needs a series divisible by y",
                    _ => "inv_one_minus_y needs a series divisible by y",
                }));
            }
        }
        Ok(())
    }

    /// `1 / (1 - self)` for a series divisible by `y`, solved level by level in `y`.
    pub fn inv_one_minus_y(&self, bound: &XBound) -> Result<Self> {
        let ny = self.require_y_order("inv_one_minus_y")?;
        self.check_no_y0("inv")?;
        let n = self.order();
        let e = self.y_slices(ny);
        let mut d: Vec<Self> = vec![Self::one(n, None)];
        for l in 1..ny {
            let mut acc = Self::zero(n, None);
            for m in 1..=l {
                if e[m].is_zero() || d[l - m].is_zero() {
                    continue;
                }
                acc = acc.add(&e[m].mul(&d[l - m], bound)?);
            }
            d.push(acc);
        }
        Ok(Self::from_y_slices(&d, n, Some(ny)))
    }

    /// `exp(self)` for a series divisible by `y`, via `l D_l = sum m S_m D_{l-m}`.
    pub fn exp_y(&self, bound: &XBound) -> Result<Self> {
        let ny = self.require_y_order("exp_y")?;
        self.check_no_y0("exp")?;
        let n = self.order();
        let s = self.y_slices(ny);
        let mut d: Vec<Self> = vec![Self::one(n, None)];
        for l in 1..ny {
            let mut acc = Self::zero(n, None);
            for m in 1..=l {
                if s[m].is_zero() || d[l - m].is_zero() {
                    continue;
                }
                acc = acc.add(&s[m].scale(&ri(m as i64)).mul(&d[l - m], bound)?);
            }
            d.push(acc.scale(&Rat::new(1.into(), (l as i64).into())));
        }
        Ok(Self::from_y_slices(&d, n, Some(ny)))
    }

    /// Largest `x` exponent appearing at each order.
    pub fn x_degrees(&self) -> Vec<Option<i32>> {
        self.coeffs.iter().map(|p| p.x_range().map(|r| r.1)).collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::{LaurentOmega, Rat};

    type P = PolyCoeffSeries<Rat>;

    fn single(order: usize, terms: &[(usize, i32, usize, i64)], y_order: Option<usize>) -> P {
        let mut s = P::zero(order, y_order);
        for &(k, x, y, c) in terms {
            s.at_mut(k).add_at(x, y, &ri(c));
        }
        s
    }

    #[test]
    fn extract_x_linear_coefficient() {
        // [x^1](x^2 + (w + 1/w) x) = w + 1/w
        let s = LaurentOmega::from_terms([(1, ri(1)), (-1, ri(1))]);
        let mut p = PolyCoeffSeries::<LaurentOmega>::zero(1, None);
        p.at_mut(0).add_at(2, 0, &LaurentOmega::one());
        p.at_mut(0).add_at(1, 0, &s);
        let e = p.extract_x(1).to_t_series().unwrap();
        assert_eq!(e.coeff(0), &s);
    }

    #[test]
    fn extract_nonneg_laurent() {
        let p = single(1, &[(0, -2, 0, 1), (0, 0, 0, 3), (0, 1, 0, 2)], None);
        assert_eq!(p.extract_x_nonneg(), single(1, &[(0, 0, 0, 3), (0, 1, 0, 2)], None));
    }

    #[test]
    fn extract_y_linear_coefficient() {
        // [y^1](1 + y (1 + 2t)) = 1 + 2t
        let p = single(3, &[(0, 0, 0, 1), (0, 0, 1, 1), (1, 0, 1, 2)], Some(4));
        let e = p.extract_y(1).to_t_series().unwrap();
        assert_eq!(e, TruncSeries::from_ints(&[1, 2, 0]));
    }

    #[test]
    fn geometric_substitution_of_x() {
        let p = single(1, &[(0, 1, 0, 1)], None);
        let g = p.substitute_x_geometric(&XBound::series(5, 0)).unwrap();
        for i in 0..=5 {
            assert_eq!(g.coeff(0, i, 0), ri(1));
        }
        assert_eq!(g.coeff(0, 6, 0), ri(0));
        // x^2 -> 1/(1-x)^2 = sum (i+1) x^i
        let p2 = single(1, &[(0, 2, 0, 1)], None);
        let g2 = p2.substitute_x_geometric(&XBound::series(4, 0)).unwrap();
        assert_eq!(g2.coeff(0, 4, 0), ri(5));
    }

    #[test]
    fn inverse_and_tx_substitutions() {
        let p = single(1, &[(0, 2, 0, 3)], None);
        assert_eq!(p.substitute_x_inverse(), single(1, &[(0, -2, 0, 3)], None));
        let y2 = single(3, &[(0, 0, 2, 1)], None);
        assert_eq!(y2.substitute_y_tx().unwrap(), single(3, &[(2, 2, 0, 1)], None));
        // beyond the order, the term is dropped
        assert!(single(2, &[(0, 0, 2, 1)], None).substitute_y_tx().unwrap().is_zero());
    }

    #[test]
    fn strict_bound_reports_overflow() {
        let x = single(2, &[(0, 1, 0, 1)], None);
        assert!(x.mul(&x, &XBound::poly(2, 0)).is_ok());
        assert!(matches!(x.mul(&x, &XBound::poly(1, 0)), Err(Error::DegreeOverflow(_))));
        let cut = x.mul(&x, &XBound::series(1, 0)).unwrap();
        assert!(cut.is_zero());
    }

    #[test]
    fn inverse_of_one_minus_y() {
        // 1/(1 - y) = sum y^l
        let y = single(1, &[(0, 0, 1, 1)], Some(5));
        let d = y.inv_one_minus_y(&XBound::none()).unwrap();
        for l in 0..5 {
            assert_eq!(d.coeff(0, 0, l), ri(1));
        }
        let e = y.exp_y(&XBound::none()).unwrap();
        assert_eq!(e.coeff(0, 0, 3), Rat::new(1.into(), 6.into()));
        assert!(single(1, &[(0, 0, 0, 1)], Some(3)).exp_y(&XBound::none()).is_err());
    }

    #[test]
    fn regrade_divides_by_t() {
        let p = single(4, &[(1, 0, 1, 7), (3, 2, 2, 1)], Some(3));
        let r = p.regrade_y_over_t().unwrap();
        assert_eq!(r.order(), 2);
        assert_eq!(r.coeff(0, 0, 1), ri(7));
        assert_eq!(r.coeff(1, 2, 2), ri(1));
        assert!(single(2, &[(0, 0, 1, 1)], Some(2)).regrade_y_over_t().is_err());
    }
}

//! Closed-form anti-Ramsey and Turán values for paths, matchings and linear
//! forests.
//!
//! Every function returns a typed error outside the range where its formula is
//! established instead of a number. All arithmetic is exact (`i128`
//! internally, checked).

use num_rational::Ratio;
use serde::Serialize;

use crate::error::FormulaError;
use crate::forest::LinearForest;

pub const LARGE_N_NOTE: &str = "n sufficiently large; threshold unquantified";

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FormulaResult {
    pub value: u128,
    /// The parity-dependent constant the formula used, when it has one.
    pub epsilon: Option<u8>,
    pub validity: String,
}

fn wide(x: u64) -> i128 {
    x as i128
}

fn binom2(x: i128) -> Result<i128, FormulaError> {
    x.checked_mul(x - 1).map(|p| p / 2).ok_or(FormulaError::Overflow)
}

/// `C(h,2) + h(n-h) + tail`: a hub of `h` vertices whose incident edges all
/// count, plus a constant contribution from the rest.
fn hub_count(h: i128, n: i128, tail: i128) -> Result<u128, FormulaError> {
    let v = binom2(h)?
        .checked_add(h.checked_mul(n - h).ok_or(FormulaError::Overflow)?)
        .and_then(|v| v.checked_add(tail))
        .ok_or(FormulaError::Overflow)?;
    u128::try_from(v).map_err(|_| FormulaError::OutOfValidity(format!("formula evaluates to {v}")))
}

fn result(value: u128, epsilon: Option<u8>, validity: impl Into<String>) -> FormulaResult {
    FormulaResult { value, epsilon, validity: validity.into() }
}

/// Anti-Ramsey number of the path `P_k`.
pub fn ar_path(n: u64, k: u64) -> Result<FormulaResult, FormulaError> {
    if k < 3 {
        return Err(FormulaError::OutOfValidity(format!(
            "k = {k}: the path formula needs k >= 3 (every colored edge is a rainbow P_2)"
        )));
    }
    if n < k {
        return Err(FormulaError::OutOfValidity(format!("n = {n} < k = {k}: no copy of P_{k} fits")));
    }
    let eps = u8::from(k.is_multiple_of(2));
    let h = wide((k - 1) / 2) - 1;
    // C(h,2) + h(n - h) + 1 + eps, with n - h = n - ⌊(k-1)/2⌋ + 1.
    let value = hub_count(h, wide(n), 1 + eps as i128)?;
    Ok(result(value, Some(eps), LARGE_N_NOTE))
}

/// Anti-Ramsey number of the matching `tK_2`.
pub fn ar_matching(n: u64, t: u64) -> Result<FormulaResult, FormulaError> {
    if t < 2 {
        return Err(FormulaError::OutOfValidity(format!("t = {t}: needs t >= 2")));
    }
    if n < 2 * t + 1 {
        return Err(FormulaError::OutOfValidity(format!("n = {n} < 2t+1 = {}", 2 * t + 1)));
    }
    let value = hub_count(wide(t) - 2, wide(n), 1)?;
    Ok(result(value, None, "n >= 2t+1"))
}

/// The exact anti-Ramsey number `f_F(n)` of a linear forest with at least one
/// even component.
pub fn ar_linear_forest(n: u64, forest: &LinearForest) -> Result<FormulaResult, FormulaError> {
    if forest.components() < 2 {
        return Err(FormulaError::Unsupported("a single path: use the path formula".into()));
    }
    let Some(eps) = forest.census().main_epsilon() else {
        return Err(FormulaError::Unsupported(format!(
            "{forest} has only odd components; only the linear coefficient is available here"
        )));
    };
    if n < forest.order() as u64 {
        return Err(FormulaError::OutOfValidity(format!("n = {n} < |V(F)| = {}", forest.order())));
    }
    let h = forest.half_sum() as i128 - 2;
    let value = hub_count(h, wide(n), 1 + eps as i128)?;
    Ok(result(value, Some(eps), "n >= f(t_1,...,t_k); threshold unquantified"))
}

/// Coefficient of `n` in the asymptotic anti-Ramsey number of a linear forest
/// with at least two components: `Σ⌊t_i/2⌋ − ϵ`.
pub fn ar_asymptotic_coefficient(forest: &LinearForest) -> Result<i64, FormulaError> {
    if forest.components() < 2 {
        return Err(FormulaError::Unsupported("needs at least two components".into()));
    }
    Ok(forest.half_sum() as i64 - forest.census().asymptotic_epsilon() as i64)
}

/// Upper bound `(k−2)n/2` on the number of edges of a `P_k`-free graph on `n`
/// vertices. Holds for every `n, k >= 1`.
pub fn erdos_gallai_bound(n: u64, k: u64) -> Result<Ratio<i128>, FormulaError> {
    if n == 0 || k == 0 {
        return Err(FormulaError::OutOfValidity("n and k must be positive".into()));
    }
    Ok(Ratio::new((wide(k) - 2) * wide(n), 2))
}

/// Turán number of `k` disjoint copies of `P_3`.
pub fn ex_kp3(n: u64, k: u64) -> Result<FormulaResult, FormulaError> {
    if k == 0 {
        return Err(FormulaError::OutOfValidity("k must be positive".into()));
    }
    if n < 7 * k {
        return Err(FormulaError::OutOfValidity(format!("n = {n} < 7k = {}", 7 * k)));
    }
    let h = wide(k) - 1;
    let value = hub_count(h, wide(n), (wide(n) - h) / 2)?;
    Ok(result(value, None, "n >= 7k"))
}

/// Turán number of a linear forest with at least two components, not all of
/// order 3.
pub fn ex_linear_forest(n: u64, forest: &LinearForest) -> Result<FormulaResult, FormulaError> {
    if forest.components() < 2 {
        return Err(FormulaError::Unsupported("a single path: use the path bound".into()));
    }
    if forest.parts().iter().all(|&t| t == 3) {
        return Err(FormulaError::Unsupported("every component is P_3: use the k·P_3 formula".into()));
    }
    if n < forest.order() as u64 {
        return Err(FormulaError::OutOfValidity(format!("n = {n} < |V(F)| = {}", forest.order())));
    }
    let c = forest.census().turan_constant();
    let h = forest.half_sum() as i128 - 1;
    let value = hub_count(h, wide(n), c as i128)?;
    Ok(result(value, Some(c), LARGE_N_NOTE))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn lf(s: &str) -> LinearForest {
        s.parse().unwrap()
    }

    #[test]
    fn path_values() {
        assert_eq!(ar_path(20, 5).unwrap().value, 20);
        assert_eq!(ar_path(20, 4).unwrap().value, 2);
        assert_eq!(ar_path(20, 4).unwrap().epsilon, Some(1));
        assert_eq!(ar_path(10, 3).unwrap().value, 1);
        assert!(matches!(ar_path(3, 4), Err(FormulaError::OutOfValidity(_))));
        assert!(ar_path(10, 2).is_err());
    }

    #[test]
    fn matching_values() {
        assert_eq!(ar_matching(5, 2).unwrap().value, 1);
        assert_eq!(ar_matching(20, 4).unwrap().value, 38);
        assert_eq!(ar_matching(10, 3).unwrap().value, 10);
        assert!(matches!(ar_matching(6, 3), Err(FormulaError::OutOfValidity(_))));
        for n in 5..200 {
            assert_eq!(ar_matching(n, 2).unwrap().value, 1);
        }
    }

    #[test]
    fn main_values() {
        let r = ar_linear_forest(20, &lf("4,2")).unwrap();
        assert_eq!((r.value, r.epsilon), (20, Some(0)));
        let r = ar_linear_forest(20, &lf("5,4")).unwrap();
        assert_eq!((r.value, r.epsilon), (39, Some(1)));
        assert_eq!(ar_linear_forest(20, &lf("3,3,2")).unwrap().value, 21);
        assert!(r.validity.contains("unquantified"));
        assert!(matches!(ar_linear_forest(20, &lf("5,3")), Err(FormulaError::Unsupported(_))));
        assert!(matches!(ar_linear_forest(20, &lf("4")), Err(FormulaError::Unsupported(_))));
        // The two smallest forests give the constants 1 and 2.
        assert_eq!(ar_linear_forest(10, &lf("2,2")).unwrap().value, 1);
        assert_eq!(ar_linear_forest(10, &lf("3,2")).unwrap().value, 2);
    }

    #[test]
    fn asymptotic_coefficients() {
        assert_eq!(ar_asymptotic_coefficient(&lf("5,4")).unwrap(), 2);
        assert_eq!(ar_asymptotic_coefficient(&lf("3,3")).unwrap(), 1);
        assert_eq!(ar_asymptotic_coefficient(&lf("2,2")).unwrap(), 0);
    }

    #[test]
    fn erdos_gallai_values() {
        assert_eq!(erdos_gallai_bound(10, 5).unwrap(), Ratio::from_integer(15));
        assert_eq!(erdos_gallai_bound(7, 2).unwrap(), Ratio::from_integer(0));
        assert_eq!(erdos_gallai_bound(6, 4).unwrap(), Ratio::from_integer(6));
        assert_eq!(erdos_gallai_bound(7, 3).unwrap(), Ratio::new(7, 2));
    }

    #[test]
    fn kp3_values() {
        assert_eq!(ex_kp3(7, 1).unwrap().value, 3);
        assert_eq!(ex_kp3(14, 2).unwrap().value, 19);
        assert_eq!(ex_kp3(21, 3).unwrap().value, 48);
        assert!(ex_kp3(13, 2).is_err());
    }

    #[test]
    fn turan_forest_values() {
        assert_eq!(ex_linear_forest(20, &lf("5,4")).unwrap().value, 54);
        let r = ex_linear_forest(20, &lf("5,3")).unwrap();
        assert_eq!((r.value, r.epsilon), (38, Some(1)));
        assert_eq!(ex_linear_forest(20, &lf("2,2")).unwrap().value, 19);
        assert!(matches!(ex_linear_forest(20, &lf("3,3")), Err(FormulaError::Unsupported(_))));
    }

    #[test]
    fn huge_n_is_exact() {
        let r = ar_linear_forest(u64::MAX, &lf("9,8,7")).unwrap();
        let n = u64::MAX as u128;
        // s = 11, hub of 9: C(9,2) + 9(n-9) + 1 + 1
        assert_eq!(r.value, 36 + 9 * (n - 9) + 2);
    }

    fn family() -> Vec<LinearForest> {
        ["2,2", "3,2", "4,2", "4,3", "4,4", "5,4", "3,3,2", "6,5,2", "7,6", "8,2,2", "9,7,4"]
            .iter()
            .map(|s| lf(s))
            .collect()
    }

    #[test]
    fn slope_matches_asymptotic_coefficient() {
        for f in family() {
            let coef = ar_asymptotic_coefficient(&f).unwrap();
            assert_eq!(coef, f.half_sum() as i64 - 2);
            let lo = f.order() as u64 + 3;
            for n in lo..lo + 40 {
                let d = ar_linear_forest(n, &f).unwrap().value as i64 - ar_linear_forest(n - 1, &f).unwrap().value as i64;
                assert_eq!(d, coef, "{f} at n = {n}");
            }
        }
    }

    #[test]
    fn anti_ramsey_below_turan() {
        for f in family() {
            let lo = f.order() as u64 + 4;
            for n in lo..lo + 40 {
                let ar = ar_linear_forest(n, &f).unwrap().value;
                let ex = ex_linear_forest(n, &f).unwrap().value;
                assert!(ar >= 1);
                assert!(ar < ex, "{f} at n = {n}: {ar} vs {ex}");
            }
        }
    }
}

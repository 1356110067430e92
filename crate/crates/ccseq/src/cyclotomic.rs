//! Exact zero tests for sums of roots of unity.
//!
//! A sum `sum_e c_e * omega_lambda^e` with integer counts `c_e` vanishes
//! exactly when the polynomial `sum_e c_e x^e` is divisible by the
//! cyclotomic polynomial `Phi_lambda(x)` over the integers. That divisibility
//! test is what every "exact zero" verdict in this crate reduces to; the
//! floating-point image is only ever diagnostic.

use std::collections::HashMap;
use std::sync::{Mutex, OnceLock};

/// Coefficients of `Phi_n(x)`, ascending degree. Monic, integer.
pub fn cyclotomic_polynomial(n: u32) -> Vec<i64> {
    assert!(n >= 1, "cyclotomic index must be positive");
    static CACHE: OnceLock<Mutex<HashMap<u32, Vec<i64>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
    if let Some(hit) = cache.lock().unwrap().get(&n) {
        return hit.clone();
    }
    let result = compute_cyclotomic(n);
    cache.lock().unwrap().insert(n, result.clone());
    result
}

fn compute_cyclotomic(n: u32) -> Vec<i64> {
    if n == 1 {
        return vec![-1, 1];
    }
    // Phi_n = (x^n - 1) / prod_{d | n, d < n} Phi_d
    let mut poly = vec![0i64; n as usize + 1];
    poly[0] = -1;
    poly[n as usize] = 1;
    for d in 1..n {
        if n.is_multiple_of(d) {
            poly = divide_exact(&poly, &cyclotomic_polynomial(d));
        }
    }
    poly
}

/// Quotient of `a / b` for monic `b`; panics if the division is not exact.
fn divide_exact(a: &[i64], b: &[i64]) -> Vec<i64> {
    let (quot, rem) = divmod_monic(a, b);
    assert!(
        rem.iter().all(|&c| c == 0),
        "cyclotomic division must be exact"
    );
    quot
}

/// Long division by a monic divisor over the integers.
fn divmod_monic(a: &[i64], b: &[i64]) -> (Vec<i64>, Vec<i64>) {
    let db = b.len() - 1;
    debug_assert_eq!(b[db], 1, "divisor must be monic");
    let mut rem: Vec<i64> = a.to_vec();
    if rem.len() <= db {
        return (vec![0], rem);
    }
    let mut quot = vec![0i64; rem.len() - db];
    for i in (db..rem.len()).rev() {
        let factor = rem[i];
        if factor == 0 {
            continue;
        }
        quot[i - db] = factor;
        for (j, &bc) in b.iter().enumerate() {
            rem[i - db + j] -= factor * bc;
        }
    }
    rem.truncate(db.max(1));
    (quot, rem)
}

/// Whether `sum_e counts[e] * omega_lambda^e` is exactly zero.
///
/// `counts` must have length `lambda`.
pub fn root_sum_is_zero(counts: &[i64], lambda: u32) -> bool {
    assert_eq!(counts.len(), lambda as usize, "one count per residue");
    if counts.iter().all(|&c| c == 0) {
        return true;
    }
    let phi = cyclotomic_polynomial(lambda);
    let (_, rem) = divmod_monic(counts, &phi);
    rem.iter().all(|&c| c == 0)
}

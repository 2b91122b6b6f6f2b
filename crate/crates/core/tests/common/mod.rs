//! Independent oracles shared by integration and acceptance tests.
#![allow(dead_code)]

/// Dense `N×N` stiffness and mass matrices of the weighted path on `{1..N}`
/// with `u(0) = u(N+1) = 0`, built from the edge sum directly.
pub fn dense_pencil(alpha: f64, n: usize) -> (Vec<Vec<f64>>, Vec<f64>) {
    let mut a = vec![vec![0.0; n]; n];
    // Edge (k−1, k) carries weight k^α for k = 1..=N+1.
    for k in 1..=n + 1 {
        let w = (k as f64).powf(alpha);
        let (i, j) = (k as isize - 2, k as isize - 1);
        if i >= 0 {
            a[i as usize][i as usize] += w;
        }
        if (j as usize) < n {
            a[j as usize][j as usize] += w;
        }
        if i >= 0 && (j as usize) < n {
            a[i as usize][j as usize] -= w;
            a[j as usize][i as usize] -= w;
        }
    }
    let b = (1..=n).map(|k| (k as f64).powf(alpha - 2.0)).collect();
    (a, b)
}

/// Sign of `det(A − λB)` by Gaussian elimination with partial pivoting.
pub fn det_sign(a: &[Vec<f64>], b: &[f64], lambda: f64) -> f64 {
    let n = b.len();
    let mut m: Vec<Vec<f64>> = a.to_vec();
    for (i, row) in m.iter_mut().enumerate() {
        row[i] -= lambda * b[i];
    }
    let mut sign = 1.0;
    for col in 0..n {
        let piv = (col..n)
            .max_by(|&x, &y| m[x][col].abs().total_cmp(&m[y][col].abs()))
            .unwrap();
        if m[piv][col] == 0.0 {
            return 0.0;
        }
        if piv != col {
            m.swap(piv, col);
            sign = -sign;
        }
        let p = m[col][col];
        if p < 0.0 {
            sign = -sign;
        }
        let (top, rest) = m.split_at_mut(col + 1);
        let pivot_row = &top[col];
        for row in rest {
            let f = row[col] / p;
            for (x, &y) in row[col..].iter_mut().zip(&pivot_row[col..]) {
                *x -= f * y;
            }
        }
    }
    sign
}

/// Smallest root of `det(A − λB)`: first sign change on a fine grid over
/// `[0, a_11/b_1]`, refined by bisection.
pub fn dense_min_eigenvalue(alpha: f64, n: usize) -> f64 {
    let (a, b) = dense_pencil(alpha, n);
    let top = a[0][0] / b[0];
    let steps = 20_000;
    let s0 = det_sign(&a, &b, 0.0);
    let mut lo = 0.0;
    let mut hi = top;
    for i in 1..=steps {
        let x = top * i as f64 / steps as f64;
        let s = det_sign(&a, &b, x);
        if s != s0 {
            hi = x;
            break;
        }
        lo = x;
    }
    for _ in 0..200 {
        let mid = 0.5 * (lo + hi);
        if mid <= lo || mid >= hi {
            break;
        }
        if det_sign(&a, &b, mid) == s0 {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    0.5 * (lo + hi)
}

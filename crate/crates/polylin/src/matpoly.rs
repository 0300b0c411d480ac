use ndarray::Array2;
use num_complex::Complex64;

/// Smoke-test struct for probing the build.
pub struct MatrixPolynomial {
    pub coeffs: Vec<Array2<Complex64>>,
}

pub fn singular_values_probe(a: &Array2<Complex64>) -> Vec<f64> {
    let (m, n) = a.dim();
    let mut af = vec![Complex64::new(0.0, 0.0); m * n];
    for j in 0..n {
        for i in 0..m {
            af[j * m + i] = a[(i, j)];
        }
    }
    let k = m.min(n);
    let mut s = vec![0.0f64; k];
    let mut u = vec![Complex64::new(0.0, 0.0); 1];
    let mut vt = vec![Complex64::new(0.0, 0.0); 1];
    let lwork = (5 * k.max(1) + m + n) as i32;
    let mut work = vec![Complex64::new(0.0, 0.0); lwork as usize];
    let mut rwork = vec![0.0f64; 5 * k.max(1)];
    let mut info = 0;
    unsafe {
        lapack::zgesvd(
            b'N',
            b'N',
            m as i32,
            n as i32,
            &mut af,
            m as i32,
            &mut s,
            &mut u,
            1,
            &mut vt,
            1,
            &mut work,
            lwork,
            &mut rwork,
            &mut info,
        );
    }
    assert_eq!(info, 0);
    s
}

pub fn zggev_probe(n: i32) -> i32 {
    let mut a = vec![Complex64::new(0.0, 0.0); (n * n) as usize];
    let mut b = vec![Complex64::new(0.0, 0.0); (n * n) as usize];
    for i in 0..n as usize {
        a[i * n as usize + i] = Complex64::new(i as f64 + 1.0, 0.0);
        b[i * n as usize + i] = Complex64::new(1.0, 0.0);
    }
    let mut alpha = vec![Complex64::new(0.0, 0.0); n as usize];
    let mut beta = vec![Complex64::new(0.0, 0.0); n as usize];
    let mut vl = vec![Complex64::new(0.0, 0.0); (n * n) as usize];
    let mut vr = vec![Complex64::new(0.0, 0.0); (n * n) as usize];
    let lwork = 4 * n;
    let mut work = vec![Complex64::new(0.0, 0.0); lwork as usize];
    let mut rwork = vec![0.0f64; (8 * n) as usize];
    let mut info = 0;
    unsafe {
        lapack::zggev(
            b'V', b'V', n, &mut a, n, &mut b, n, &mut alpha, &mut beta, &mut vl, n, &mut vr, n,
            &mut work, lwork, &mut rwork, &mut info,
        );
    }
    info
}

#[cfg(test)]
mod tests {
    use super::*;
    use ndarray::array;

    #[test]
    fn probe_svd_and_zggev() {
        let a = array![
            [Complex64::new(3.0, 0.0), Complex64::new(0.0, 0.0)],
            [Complex64::new(0.0, 0.0), Complex64::new(-4.0, 0.0)]
        ];
        let s = singular_values_probe(&a);
        assert!((s[0] - 4.0).abs() < 1e-12);
        assert_eq!(zggev_probe(3), 0);
    }
}

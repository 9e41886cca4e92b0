//! Minimal FFI to the system LAPACK: dense symmetric eigendecomposition.

use crate::error::{Error, Result};

extern "C" {
    fn dsyevd_(
        jobz: *const u8,
        uplo: *const u8,
        n: *const i32,
        a: *mut f64,
        lda: *const i32,
        w: *mut f64,
        work: *mut f64,
        lwork: *const i32,
        iwork: *mut i32,
        liwork: *const i32,
        info: *mut i32,
    );
}

/// Eigendecomposition of a symmetric matrix given in column-major order.
/// Returns ascending eigenvalues; when `vectors` is true, `a` is overwritten
/// with the orthonormal eigenvectors (one per column).
pub fn symmetric_eigen(a: &mut [f64], n: usize, vectors: bool) -> Result<Vec<f64>> {
    assert_eq!(a.len(), n * n);
    let jobz = if vectors { b'V' } else { b'N' };
    let n_i = n as i32;
    let mut w = vec![0.0f64; n];
    let mut info = 0i32;

    // Workspace query
    let mut work_query = [0.0f64; 1];
    let mut iwork_query = [0i32; 1];
    let neg_one = -1i32;
    unsafe {
        dsyevd_(
            &jobz,
            &b'L',
            &n_i,
            a.as_mut_ptr(),
            &n_i,
            w.as_mut_ptr(),
            work_query.as_mut_ptr(),
            &neg_one,
            iwork_query.as_mut_ptr(),
            &neg_one,
            &mut info,
        );
    }
    if info != 0 {
        return Err(Error::numerical(format!(
            "dsyevd workspace query failed (info={info})"
        )));
    }
    let lwork = work_query[0] as i32;
    let liwork = iwork_query[0];
    let mut work = vec![0.0f64; lwork.max(1) as usize];
    let mut iwork = vec![0i32; liwork.max(1) as usize];
    unsafe {
        dsyevd_(
            &jobz,
            &b'L',
            &n_i,
            a.as_mut_ptr(),
            &n_i,
            w.as_mut_ptr(),
            work.as_mut_ptr(),
            &lwork,
            iwork.as_mut_ptr(),
            &liwork,
            &mut info,
        );
    }
    if info != 0 {
        return Err(Error::numerical(format!(
            "dsyevd failed to converge (info={info})"
        )));
    }
    Ok(w)
}

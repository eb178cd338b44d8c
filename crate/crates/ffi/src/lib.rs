//! C ABI over `liestab`.
//!
//! Every function returns a [`LiestabStatus`]; on failure a message is kept per
//! thread and read with [`liestab_last_error`]. Algebras are opaque handles
//! released with [`liestab_algebra_free`]; strings returned by the library are
//! released with [`liestab_string_free`]. Panics never cross the boundary.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use liestab::flag::{Family, Flag};
use liestab::lie::{survey, unipotent_center_dim, CoadjointSurvey, MatrixLieAlgebra, SamplingConfig, StabilityVerdict, DEFAULT_SEED};
use liestab::report::to_json;
use liestab::verify::{run_sweep, AlgebraKind, Check, SweepConfig, Target};
use liestab::Error;

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum LiestabStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidArgument = 2,
    InvalidFlag = 3,
    NonIsotropicFlag = 4,
    /// Sampling could not settle the answer; retry with more trials or another seed.
    Undecided = 5,
    ComputationFailed = 6,
    Panic = 7,
}

/// Values accepted for the `family` parameters.
#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum LiestabFamily {
    /// Flag and generic alternating form stabilizer in gl(V).
    Rv = 0,
    /// Isotropic flag stabilizer in so(q).
    Pv = 1,
    /// Flag parabolic of gl(V).
    Gl = 2,
}

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct LiestabSampling {
    pub seed: u64,
    pub trials: usize,
    pub coeff_bound: u64,
}

/// Opaque algebra handle.
pub struct LiestabAlgebra {
    target: Target,
    algebra: MatrixLieAlgebra,
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

type Failure = (LiestabStatus, String);

fn set_error(msg: String) {
    let c = CString::new(msg.replace('\0', " ")).expect("nul bytes removed");
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(c));
}

fn from_error(e: Error) -> Failure {
    let status = match e {
        Error::InvalidFlag(_) => LiestabStatus::InvalidFlag,
        Error::NonIsotropicFlag { .. } => LiestabStatus::NonIsotropicFlag,
        Error::InvalidParameter(_) => LiestabStatus::InvalidArgument,
        Error::SamplingDegenerate(_) => LiestabStatus::Undecided,
        _ => LiestabStatus::ComputationFailed,
    };
    (status, e.to_string())
}

/// Runs `f`, recording its error or panic; clears the last error on success.
fn guard(f: impl FnOnce() -> Result<(), Failure>) -> LiestabStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => {
            LAST_ERROR.with(|e| *e.borrow_mut() = None);
            LiestabStatus::Ok
        }
        Ok(Err((status, msg))) => {
            set_error(msg);
            status
        }
        Err(payload) => {
            let msg = payload
                .downcast_ref::<String>()
                .cloned()
                .or_else(|| payload.downcast_ref::<&str>().map(|s| s.to_string()))
                .unwrap_or_else(|| "unknown panic".into());
            set_error(format!("internal panic: {msg}"));
            LiestabStatus::Panic
        }
    }
}

fn non_null<T>(p: *const T, name: &str) -> Result<(), Failure> {
    if p.is_null() {
        Err((LiestabStatus::NullPointer, format!("{name} is null")))
    } else {
        Ok(())
    }
}

fn kind(family: u32) -> Result<AlgebraKind, Failure> {
    match family {
        0 => Ok(AlgebraKind::Rv),
        1 => Ok(AlgebraKind::Pv),
        2 => Ok(AlgebraKind::Gl),
        other => Err((LiestabStatus::InvalidArgument, format!("family {other} is not 0 (rv), 1 (pv) or 2 (gl)"))),
    }
}

/// # Safety
/// `sampling` is null or points to a valid `LiestabSampling`.
unsafe fn sampling(s: *const LiestabSampling) -> Result<SamplingConfig, Failure> {
    let cfg = match s.as_ref() {
        None => SamplingConfig::default(),
        Some(s) => SamplingConfig { seed: s.seed, trials: s.trials, coeff_bound: s.coeff_bound },
    };
    cfg.validate().map_err(from_error)?;
    Ok(cfg)
}

/// The default sampling parameters (fixed seed, 5 trials, coefficients in [-100, 100]).
#[no_mangle]
pub extern "C" fn liestab_sampling_default() -> LiestabSampling {
    let d = SamplingConfig::default();
    debug_assert_eq!(d.seed, DEFAULT_SEED);
    LiestabSampling { seed: d.seed, trials: d.trials, coeff_bound: d.coeff_bound }
}

/// Message for the last failed call on this thread, or null. Valid until the
/// next library call on the same thread; do not free.
#[no_mangle]
pub extern "C" fn liestab_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |c| c.as_ptr()))
}

/// Builds the algebra of `family` for the flag `dims[0..len]`.
///
/// `q` is the ambient dimension for pv; for rv and gl pass 0 or the last flag
/// dimension.
///
/// # Safety
/// `dims` points to `len` readable values and `out` to writable storage.
#[no_mangle]
pub unsafe extern "C" fn liestab_algebra_new(
    family: u32,
    q: usize,
    dims: *const usize,
    len: usize,
    out: *mut *mut LiestabAlgebra,
) -> LiestabStatus {
    guard(|| {
        non_null(out, "out")?;
        non_null(dims, "dims")?;
        let flag = Flag::new(std::slice::from_raw_parts(dims, len).to_vec()).map_err(from_error)?;
        let target = match kind(family)? {
            AlgebraKind::Pv => Target::pv(q, flag).map_err(from_error)?,
            k => {
                if q != 0 && q != flag.total() {
                    return Err((
                        LiestabStatus::InvalidArgument,
                        format!("q = {q} differs from the last flag dimension {}", flag.total()),
                    ));
                }
                Target { kind: k, q: flag.total(), flag }
            }
        };
        let algebra = target.build().map_err(from_error)?;
        *out = Box::into_raw(Box::new(LiestabAlgebra { target, algebra }));
        Ok(())
    })
}

/// Releases a handle; null is ignored.
///
/// # Safety
/// `a` is null or came from [`liestab_algebra_new`] and was not freed before.
#[no_mangle]
pub unsafe extern "C" fn liestab_algebra_free(a: *mut LiestabAlgebra) {
    if !a.is_null() {
        drop(Box::from_raw(a));
    }
}

/// # Safety
/// `a` is a live handle and `out` is writable.
#[no_mangle]
pub unsafe extern "C" fn liestab_algebra_dim(a: *const LiestabAlgebra, out: *mut usize) -> LiestabStatus {
    guard(|| {
        non_null(a, "algebra")?;
        non_null(out, "out")?;
        *out = (*a).algebra.dim();
        Ok(())
    })
}

/// Survey seeded as the CLI and the sweeps do for the same target.
unsafe fn surveyed<'a>(a: *const LiestabAlgebra, s: *const LiestabSampling) -> Result<(&'a LiestabAlgebra, CoadjointSurvey), Failure> {
    non_null(a, "algebra")?;
    let a = &*a;
    let base = sampling(s)?;
    let cfg = SamplingConfig { seed: a.target.seed(base.seed), ..base };
    let sv = survey(&a.algebra, &cfg).map_err(from_error)?;
    Ok((a, sv))
}

/// Index of the algebra. `sampling` may be null for the defaults.
///
/// # Safety
/// `a` is a live handle, `sampling` is null or valid, `out` is writable.
#[no_mangle]
pub unsafe extern "C" fn liestab_index(a: *const LiestabAlgebra, sampling: *const LiestabSampling, out: *mut usize) -> LiestabStatus {
    guard(|| {
        non_null(out, "out")?;
        *out = surveyed(a, sampling)?.1.index;
        Ok(())
    })
}

/// Cartan–Duflo rank of the algebra.
///
/// # Safety
/// As for [`liestab_index`].
#[no_mangle]
pub unsafe extern "C" fn liestab_rank(a: *const LiestabAlgebra, sampling: *const LiestabSampling, out: *mut usize) -> LiestabStatus {
    guard(|| {
        non_null(out, "out")?;
        *out = surveyed(a, sampling)?.1.rank();
        Ok(())
    })
}

/// # Safety
/// As for [`liestab_index`].
#[no_mangle]
pub unsafe extern "C" fn liestab_is_quasi_reductive(
    a: *const LiestabAlgebra,
    sampling: *const LiestabSampling,
    out: *mut bool,
) -> LiestabStatus {
    guard(|| {
        non_null(out, "out")?;
        let (a, sv) = surveyed(a, sampling)?;
        let z = unipotent_center_dim(&a.algebra).map_err(from_error)?;
        *out = sv.index == sv.rank() + z;
        Ok(())
    })
}

/// Writes whether the algebra has a stable form; `Undecided` if sampling could not tell.
///
/// # Safety
/// As for [`liestab_index`].
#[no_mangle]
pub unsafe extern "C" fn liestab_is_stable(a: *const LiestabAlgebra, sampling: *const LiestabSampling, out: *mut bool) -> LiestabStatus {
    guard(|| {
        non_null(out, "out")?;
        let (_, sv) = surveyed(a, sampling)?;
        *out = match sv.stability {
            StabilityVerdict::Stable => true,
            StabilityVerdict::NotStable => false,
            StabilityVerdict::Inconclusive => {
                return Err((
                    LiestabStatus::Undecided,
                    format!("stability undecided after {} draws; raise trials or change the seed", sv.draws),
                ))
            }
        };
        Ok(())
    })
}

/// Runs a sweep and writes its JSON report to `*out_json` (free with
/// [`liestab_string_free`]). `family` is 0 (rv) or 1 (pv); `checks` is a
/// comma list such as `"index,rank"`, `"all"`, or null for the default set.
///
/// # Safety
/// `checks` is null or a NUL-terminated string, `sampling` is null or valid,
/// `out_json` is writable.
#[no_mangle]
pub unsafe extern "C" fn liestab_sweep_json(
    family: u32,
    max_ambient: usize,
    checks: *const c_char,
    sampling: *const LiestabSampling,
    out_json: *mut *mut c_char,
) -> LiestabStatus {
    guard(|| {
        non_null(out_json, "out_json")?;
        let family = match kind(family)? {
            AlgebraKind::Rv => Family::RV,
            AlgebraKind::Pv => Family::PV,
            AlgebraKind::Gl => return Err((LiestabStatus::InvalidArgument, "sweeps cover rv and pv only".into())),
        };
        let mut cfg = SweepConfig::new(family, max_ambient);
        cfg.sampling = self::sampling(sampling)?;
        if !checks.is_null() {
            let text = CStr::from_ptr(checks)
                .to_str()
                .map_err(|_| (LiestabStatus::InvalidArgument, "checks is not UTF-8".to_string()))?;
            cfg.checks = Check::parse_list(text).map_err(from_error)?;
        }
        let report = run_sweep(&cfg).map_err(from_error)?;
        let json = to_json(&report).map_err(from_error)?;
        *out_json = CString::new(json).expect("JSON has no NUL").into_raw();
        Ok(())
    })
}

/// Releases a string returned by the library; null is ignored.
///
/// # Safety
/// `s` is null or came from this library and was not freed before.
#[no_mangle]
pub unsafe extern "C" fn liestab_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

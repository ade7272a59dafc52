//! C ABI over the `tilting` crate.
//!
//! A parsed quiver file lives behind an opaque `TiltingDocument` handle.
//! Every call returns a `TiltingStatus`; on failure the message is kept per
//! thread and read with `tilting_last_error`. Strings handed out by the
//! library are released with `tilting_string_free`.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use tilting::algebra::SearchParams;
use tilting::glue::{glue_stt, GluingContext};
use tilting::golden::verify_tables;
use tilting::io::{parse_document, Document};
use tilting::linalg::PrimeField;
use tilting::tilt::{Catalog, Lattice, DEFAULT_CAP};
use tilting::Error;

/// Result of every call. The numeric values match the CLI exit codes.
#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TiltingStatus {
    Ok = 0,
    /// Parse, usage or algebra-shape error.
    Input = 2,
    RepresentationInfinite = 3,
    /// A checked postcondition failed or a search was undecided.
    Invariant = 4,
    TableMismatch = 5,
    NullArgument = 6,
    OutOfRange = 7,
    Panic = 8,
}

/// Which algebra of a glued file a query refers to.
#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TiltingSide {
    A = 0,
    B = 1,
    C = 2,
}

/// A parsed file with its support τ-tilting enumerations.
pub struct TiltingDocument {
    doc: Document,
    lattice: Lattice,
    glue: Option<GluingContext>,
}

impl TiltingDocument {
    fn lattice(&self, side: TiltingSide) -> Result<&Lattice, Failure> {
        match (side, &self.glue) {
            (TiltingSide::A, _) => Ok(&self.lattice),
            (TiltingSide::B, Some(g)) => Ok(g.b()),
            (TiltingSide::C, Some(g)) => Ok(g.c()),
            _ => Err(Failure(TiltingStatus::Input, "B and C only exist in a glued file".into())),
        }
    }
}

struct Failure(TiltingStatus, String);

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let status = match e.exit_code() {
            3 => TiltingStatus::RepresentationInfinite,
            4 => TiltingStatus::Invariant,
            5 => TiltingStatus::TableMismatch,
            _ => TiltingStatus::Input,
        };
        Failure(status, e.to_string())
    }
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_last_error(msg: String) {
    let c = CString::new(msg.replace('\0', " ")).expect("no interior nul");
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(c));
}

/// Runs `body`, converting errors and panics into a status.
fn guard(body: impl FnOnce() -> Result<(), Failure>) -> TiltingStatus {
    match catch_unwind(AssertUnwindSafe(body)) {
        Ok(Ok(())) => {
            LAST_ERROR.with(|e| *e.borrow_mut() = None);
            TiltingStatus::Ok
        }
        Ok(Err(Failure(status, msg))) => {
            set_last_error(msg);
            status
        }
        Err(_) => {
            set_last_error("internal panic".into());
            TiltingStatus::Panic
        }
    }
}

fn null() -> Failure {
    Failure(TiltingStatus::NullArgument, "null pointer argument".into())
}

unsafe fn text<'a>(s: *const c_char) -> Result<&'a str, Failure> {
    if s.is_null() {
        return Err(null());
    }
    CStr::from_ptr(s).to_str().map_err(|_| Failure(TiltingStatus::Input, "string is not UTF-8".into()))
}

unsafe fn write<T>(out: *mut T, value: T) -> Result<(), Failure> {
    if out.is_null() {
        return Err(null());
    }
    out.write(value);
    Ok(())
}

unsafe fn document<'a>(doc: *const TiltingDocument) -> Result<&'a TiltingDocument, Failure> {
    doc.as_ref().ok_or_else(null)
}

fn field(p: u32) -> Result<PrimeField, Failure> {
    Ok(PrimeField::new(p)?)
}

fn owned_string(s: String) -> *mut c_char {
    CString::new(s.replace('\0', " ")).expect("no interior nul").into_raw()
}

/// Parses a quiver or glued-algebra file over `F_p` and enumerates its
/// support τ-tilting pairs. `seed` drives the randomized searches.
///
/// # Safety
/// `source` must be a nul-terminated string and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn tilting_document_parse(
    source: *const c_char,
    p: u32,
    seed: u64,
    out: *mut *mut TiltingDocument,
) -> TiltingStatus {
    guard(|| {
        if out.is_null() {
            return Err(null());
        }
        let params = SearchParams { seed, ..SearchParams::default() };
        let doc = parse_document(text(source)?, field(p)?, params, DEFAULT_CAP)?;
        let lattice = Lattice::new(Catalog::new(&doc.algebra, DEFAULT_CAP)?)?;
        let glue = doc.glued.clone().map(|g| GluingContext::new(g, DEFAULT_CAP)).transpose()?;
        write(out, Box::into_raw(Box::new(TiltingDocument { doc, lattice, glue })))
    })
}

/// Releases a document. Null is ignored.
///
/// # Safety
/// `doc` must come from `tilting_document_parse` and not be used afterwards.
#[no_mangle]
pub unsafe extern "C" fn tilting_document_free(doc: *mut TiltingDocument) {
    if !doc.is_null() {
        drop(Box::from_raw(doc));
    }
}

/// Number of vertices of the algebra on `side`.
///
/// # Safety
/// `doc` and `out` must be valid pointers.
#[no_mangle]
pub unsafe extern "C" fn tilting_vertex_count(
    doc: *const TiltingDocument,
    side: TiltingSide,
    out: *mut usize,
) -> TiltingStatus {
    guard(|| {
        let d = document(doc)?;
        let n = d.lattice(side)?.catalog().algebra().vertex_count();
        write(out, n)
    })
}

/// Number of support τ-tilting pairs of the algebra on `side`.
///
/// # Safety
/// `doc` and `out` must be valid pointers.
#[no_mangle]
pub unsafe extern "C" fn tilting_stt_count(
    doc: *const TiltingDocument,
    side: TiltingSide,
    out: *mut usize,
) -> TiltingStatus {
    guard(|| write(out, document(doc)?.lattice(side)?.len()))
}

/// Name of pair `index` on `side`, summands joined by `⊕` and `0` for the
/// zero module. Free the result with `tilting_string_free`.
///
/// # Safety
/// `doc` and `out` must be valid pointers.
#[no_mangle]
pub unsafe extern "C" fn tilting_stt_name(
    doc: *const TiltingDocument,
    side: TiltingSide,
    index: usize,
    out: *mut *mut c_char,
) -> TiltingStatus {
    guard(|| {
        let l = document(doc)?.lattice(side)?;
        if index >= l.len() {
            return Err(Failure(TiltingStatus::OutOfRange, format!("pair {index} of {}", l.len())));
        }
        if out.is_null() {
            return Err(null());
        }
        write(out, owned_string(l.pair(index).name(l.catalog())))
    })
}

/// Number of covering relations in the Hasse quiver on `side`.
///
/// # Safety
/// `doc` and `out` must be valid pointers.
#[no_mangle]
pub unsafe extern "C" fn tilting_hasse_edge_count(
    doc: *const TiltingDocument,
    side: TiltingSide,
    out: *mut usize,
) -> TiltingStatus {
    guard(|| write(out, document(doc)?.lattice(side)?.edges().len()))
}

/// Number of maximal green sequences on `side`.
///
/// # Safety
/// `doc` and `out` must be valid pointers.
#[no_mangle]
pub unsafe extern "C" fn tilting_mgs_count(
    doc: *const TiltingDocument,
    side: TiltingSide,
    out: *mut usize,
) -> TiltingStatus {
    guard(|| write(out, document(doc)?.lattice(side)?.maximal_green_sequences().len()))
}

/// Glues `B`-pair `x` with `C`-pair `y` and writes the index of the result
/// among the `A`-pairs.
///
/// # Safety
/// `doc` and `out` must be valid pointers.
#[no_mangle]
pub unsafe extern "C" fn tilting_glue(
    doc: *const TiltingDocument,
    x: usize,
    y: usize,
    out: *mut usize,
) -> TiltingStatus {
    guard(|| {
        let d = document(doc)?;
        let ctx = d.glue.as_ref().ok_or_else(|| Failure(TiltingStatus::Input, "not a glued file".into()))?;
        if x >= ctx.b().len() || y >= ctx.c().len() {
            return Err(Failure(TiltingStatus::OutOfRange, format!("pair ({x}, {y})")));
        }
        if out.is_null() {
            return Err(null());
        }
        let node = glue_stt(ctx, x, y)?.node;
        // Keep A-indices consistent with `tilting_stt_name(.., TILTING_SIDE_A, ..)`.
        let pair = ctx.a().pair(node);
        let idx = d.lattice.index_of_pair(pair).ok_or_else(|| Failure(TiltingStatus::Invariant, "lost pair".into()))?;
        write(out, idx)
    })
}

/// Number of named modules in the file.
///
/// # Safety
/// `doc` and `out` must be valid pointers.
#[no_mangle]
pub unsafe extern "C" fn tilting_module_count(doc: *const TiltingDocument, out: *mut usize) -> TiltingStatus {
    guard(|| write(out, document(doc)?.doc.modules.len()))
}

/// Recomputes the built-in tables over `F_p`; writes the number of failed
/// checks and returns `TableMismatch` when it is nonzero.
///
/// # Safety
/// `failures` must be a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn tilting_verify_tables(p: u32, failures: *mut usize) -> TiltingStatus {
    guard(|| {
        if failures.is_null() {
            return Err(null());
        }
        let report = verify_tables(field(p)?, SearchParams::default(), DEFAULT_CAP)?;
        let n = report.failures().count();
        write(failures, n)?;
        if n > 0 {
            return Err(Failure(TiltingStatus::TableMismatch, format!("{n} table checks failed")));
        }
        Ok(())
    })
}

/// Message of the last failed call on this thread, or null. Owned by the
/// library and valid until the next call on the same thread.
#[no_mangle]
pub extern "C" fn tilting_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |s| s.as_ptr()))
}

/// Releases a string returned by the library. Null is ignored.
///
/// # Safety
/// `s` must come from this library and not be used afterwards.
#[no_mangle]
pub unsafe extern "C" fn tilting_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

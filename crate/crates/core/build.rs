use std::env;
use std::path::Path;

// The netlib backend of the linear-algebra stack links `-lcblas`, but
// Debian-family systems fold the CBLAS symbols into the BLAS library itself
// (OpenBLAS here) and ship no separate libcblas. Alias it inside OUT_DIR so
// the link resolves against the system BLAS without touching anything outside
// the build tree.
fn main() {
    let out_dir = env::var("OUT_DIR").expect("OUT_DIR is set by cargo");
    let alias = Path::new(&out_dir).join("libcblas.so");
    if !alias.exists() {
        let candidates = [
            "/usr/lib/x86_64-linux-gnu/libopenblas.so",
            "/usr/lib/x86_64-linux-gnu/libblas.so.3",
            "/usr/lib/libopenblas.so",
            "/usr/lib/libblas.so.3",
        ];
        for target in candidates {
            if Path::new(target).exists() {
                #[cfg(unix)]
                std::os::unix::fs::symlink(target, &alias).ok();
                break;
            }
        }
    }
    println!("cargo:rustc-link-search=native={out_dir}");
    // ndarray's `blas` feature calls cblas_* directly and expects the using
    // crate to supply the implementation.
    println!("cargo:rustc-link-lib=cblas");
}

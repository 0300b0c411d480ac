// Link the system reference LAPACK and BLAS. `lapack-sys` declares the
// symbols but leaves linkage to the consumer.
fn main() {
    println!("cargo:rustc-link-lib=dylib=lapack");
    println!("cargo:rustc-link-lib=dylib=blas");
}

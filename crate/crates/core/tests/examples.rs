// Every example doubles as a smoke test.

macro_rules! example {
    ($name:ident, $file:literal) => {
        #[path = $file]
        mod $name;

        #[test]
        fn $name() {
            $name::run().unwrap();
        }
    };
}

example!(qseries, "../examples/qseries.rs");
example!(polynomials, "../examples/polynomials.rs");
example!(bispectrality, "../examples/bispectrality.rs");
example!(baxter, "../examples/baxter.rs");
example!(biorthogonality, "../examples/biorthogonality.rs");
example!(adjoints, "../examples/adjoints.rs");
example!(algebra, "../examples/algebra.rs");
example!(sweep, "../examples/sweep.rs");

macro_rules! example {
    ($module:ident, $file:literal) => {
        #[allow(dead_code)]
        mod $module {
            include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/", $file));
        }
    };
}

example!(exact_linalg, "exact_linalg.rs");
example!(lie_structure, "lie_structure.rs");
example!(complex_structures, "complex_structures.rs");
example!(affine_algebras, "affine_algebras.rs");
example!(catalog_tour, "catalog_tour.rs");
example!(flag_decomposition, "flag_decomposition.rs");
example!(obstructions, "obstructions.rs");
example!(file_formats, "file_formats.rs");

#[test]
fn exact_linalg_runs() {
    exact_linalg::run_example().expect("exact_linalg example should run");
}

#[test]
fn lie_structure_runs() {
    lie_structure::run_example().expect("lie_structure example should run");
}

#[test]
fn complex_structures_runs() {
    complex_structures::run_example().expect("complex_structures example should run");
}

#[test]
fn affine_algebras_runs() {
    affine_algebras::run_example().expect("affine_algebras example should run");
}

#[test]
fn catalog_tour_runs() {
    catalog_tour::run_example().expect("catalog_tour example should run");
}

#[test]
fn flag_decomposition_runs() {
    flag_decomposition::run_example().expect("flag_decomposition example should run");
}

#[test]
fn obstructions_runs() {
    obstructions::run_example().expect("obstructions example should run");
}

#[test]
fn file_formats_runs() {
    file_formats::run_example().expect("file_formats example should run");
}

use garnir::combinat::{ExchangeVector, Partition};
use garnir::exactla::{image_contains, image_contains_certified, SparseMat};
use garnir::exalg::MapDescriptor;
use garnir::schur::schur_model;
use garnir::specht::{relation_vectors, schur_functor_restrict, tabloid_basis, RelationFamily};
use std::time::Instant;

fn time<T>(label: &str, f: impl FnOnce() -> T) -> T {
    let t0 = Instant::now();
    let out = f();
    println!("{label}: {:?}", t0.elapsed());
    out
}

fn main() {
    let p = |parts: &[usize]| Partition::new(parts.to_vec()).unwrap();

    for parts in [vec![8], vec![7, 1], vec![5, 3], vec![4, 4], vec![6, 2]] {
        let lam = p(&parts);
        let basis = tabloid_basis(&lam);
        let rows = relation_vectors(&basis, &RelationFamily::Classic).unwrap();
        println!(
            "lambda={lam}: {} tabloids, {} relations",
            basis.len(),
            rows.len()
        );
        let mat = SparseMat::new(basis.len(), rows);
        let r = time(&format!("  classic rank certified {lam}"), || {
            mat.rank_certified()
        });
        println!("  quotient = {}", basis.len() - r);
    }

    // schur model at the biggest Pieri instance
    let m = time("schur_model((4,3), n=8)", || {
        schur_model(&p(&[4, 3]), 8).unwrap()
    });
    println!("  dim = {}", m.dimension());

    // bridge at lambda=(4,4), k=(2,2,2): SGR and GR, exact vs certified
    let lam = p(&[4, 4]);
    let kv = ExchangeVector::new(&lam, vec![2, 2, 2]).unwrap();
    let basis = tabloid_basis(&lam);
    let rel = SparseMat::new(
        basis.len(),
        relation_vectors(&basis, &RelationFamily::Sgr(kv.clone())).unwrap(),
    );
    let mu = lam.conjugate();
    let r = lam.size();
    let mut gl_cols = Vec::new();
    for c in 0..mu.len() - 1 {
        let inner = MapDescriptor::Psi {
            a: mu.parts()[c],
            b: mu.parts()[c + 1],
            k: kv.ks()[c],
        };
        let d = MapDescriptor::Extended {
            ambient: mu.parts().to_vec(),
            pos: c,
            inner: Box::new(inner),
        };
        let w = time(&format!("  restrict psi block c={c}"), || {
            schur_functor_restrict(&d, r).unwrap()
        });
        gl_cols.extend(w.columns().to_vec());
    }
    let gl = SparseMat::new(basis.len(), gl_cols);
    println!("rel {}x{}, gl {}x{}", rel.nrows(), rel.ncols(), gl.nrows(), gl.ncols());
    let c1 = time("  image_contains_certified(rel, gl)", || {
        image_contains_certified(&rel, &gl)
    });
    let c2 = time("  image_contains_certified(gl, rel)", || {
        image_contains_certified(&gl, &rel)
    });
    println!("  certified mutual: {c1} {c2}");
    let e1 = time("  image_contains exact (rel, gl)", || {
        image_contains(&rel, &gl)
    });
    println!("  exact: {e1}");
}

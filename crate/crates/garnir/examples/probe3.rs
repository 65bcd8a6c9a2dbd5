use garnir::combinat::{partitions_up_to, ExchangeVector, Partition};
use garnir::exactla::{image_contains, SparseMat};
use garnir::exalg::MapDescriptor;
use garnir::schur::{pieri_dims, schur_model};
use garnir::specht::{relation_vectors, schur_functor_restrict, tabloid_basis, RelationFamily};
use std::time::Instant;

fn main() {
    // criterion 1: classic quotients, |lambda| <= 8, exact
    let t0 = Instant::now();
    for lam in partitions_up_to(8) {
        let basis = tabloid_basis(&lam);
        let rows = relation_vectors(&basis, &RelationFamily::Classic).unwrap();
        let rank = SparseMat::new(basis.len(), rows).rank();
        let q = basis.len() as u64 - rank as u64;
        assert_eq!(q, garnir::combinat::hook_dim(&lam), "lambda={lam}");
    }
    println!("criterion 1 (classic, exact, r<=8): {:?}", t0.elapsed());

    // criteria 2+3: two-column SGR and GR, a+b <= 9, exact
    let t0 = Instant::now();
    for a in 1..=8usize {
        for b in 1..=a.min(9 - a) {
            let lam = if b == a { Partition::new(vec![2; a]).unwrap() } else {
                let mut parts = vec![2; b]; parts.extend(vec![1; a - b]); Partition::new(parts).unwrap()
            };
            let basis = tabloid_basis(&lam);
            for k in 1..=b {
                let kv = ExchangeVector::new(&lam, vec![k]).unwrap();
                for fam in [RelationFamily::Sgr(kv.clone()), RelationFamily::Gr(kv)] {
                    let rows = relation_vectors(&basis, &fam).unwrap();
                    let _ = SparseMat::new(basis.len(), rows).rank();
                }
            }
        }
    }
    println!("criteria 2+3 (two-column, a+b<=9, exact): {:?}", t0.elapsed());

    // criterion 8: pieri dims a+b <= 7, n <= 8
    let t0 = Instant::now();
    for a in 1..=6usize {
        for b in 1..=a.min(7 - a) {
            for n in 1..=8usize {
                let dims = pieri_dims(a, b, n);
                let _ = dims;
            }
        }
    }
    println!("criterion 8 (pieri, exact-certified models): {:?}", t0.elapsed());

    // criterion 9: bridges, |lambda| <= 8, all admissible k, exact mutual containment
    let t0 = Instant::now();
    let mut count = 0usize;
    for lam in partitions_up_to(8) {
        if lam.first() < 2 { continue; }
        let basis = tabloid_basis(&lam);
        let mu = lam.conjugate();
        let r = lam.size();
        for kv in ExchangeVector::all(&lam) {
            count += 1;
            // SGR vs extended psi
            let rel = SparseMat::new(basis.len(), relation_vectors(&basis, &RelationFamily::Sgr(kv.clone())).unwrap());
            let mut cols = Vec::new();
            for c in 0..mu.len() - 1 {
                let d = MapDescriptor::Extended {
                    ambient: mu.parts().to_vec(),
                    pos: c,
                    inner: Box::new(MapDescriptor::Psi { a: mu.parts()[c], b: mu.parts()[c + 1], k: kv.ks()[c] }),
                };
                cols.extend(schur_functor_restrict(&d, r).unwrap().columns().to_vec());
            }
            let gl = SparseMat::new(basis.len(), cols);
            assert!(image_contains(&rel, &gl) && image_contains(&gl, &rel), "SGR bridge {lam} {:?}", kv.ks());
            // GR vs extended gamma
            let rel = SparseMat::new(basis.len(), relation_vectors(&basis, &RelationFamily::Gr(kv.clone())).unwrap());
            let mut cols = Vec::new();
            for c in 0..mu.len() - 1 {
                let (mc, mc1, kc) = (mu.parts()[c], mu.parts()[c + 1], kv.ks()[c]);
                let mut ambient = mu.parts().to_vec();
                ambient.splice(c..c + 2, [mc, mc1]);
                let d = MapDescriptor::Extended {
                    ambient: mu.parts().to_vec(),
                    pos: c,
                    inner: Box::new(MapDescriptor::Gamma { a: mc, b: mc1, k: kc }),
                };
                cols.extend(schur_functor_restrict(&d, r).unwrap().columns().to_vec());
            }
            let gl = SparseMat::new(basis.len(), cols);
            assert!(image_contains(&rel, &gl) && image_contains(&gl, &rel), "GR bridge {lam} {:?}", kv.ks());
        }
    }
    println!("criterion 9 (bridges, r<=8, {count} k-vectors): {:?}", t0.elapsed());

    // criterion 10: GR sufficiency over all admissible k with hypothesis
    let t0 = Instant::now();
    let mut count = 0usize;
    for lam in partitions_up_to(8) {
        if lam.first() < 2 { continue; }
        let basis = tabloid_basis(&lam);
        let mu = lam.conjugate();
        for kv in ExchangeVector::all(&lam) {
            let hyp = (0..mu.len() - 1).all(|c| {
                let (a, b, k) = (mu.parts()[c], mu.parts()[c + 1], kv.ks()[c]);
                !(k == b && k > 1 && a == b)
            });
            if !hyp { continue; }
            count += 1;
            let rows = relation_vectors(&basis, &RelationFamily::Gr(kv)).unwrap();
            let rank = SparseMat::new(basis.len(), rows).rank();
            assert_eq!(basis.len() as u64 - rank as u64, garnir::combinat::hook_dim(&lam), "lambda={lam}");
        }
    }
    println!("criterion 10 (GR sufficiency, {count} cases): {:?}", t0.elapsed());

    // schur model exact vs certified comparison on theta matrices
    let t0 = Instant::now();
    for (a, b, n) in [(4usize, 3usize, 8usize), (4, 3, 7), (3, 3, 8)] {
        let m = schur_model(&Partition::new(vec![a, b]).unwrap(), n).unwrap();
        let _ = m.dimension();
    }
    println!("three big schur models: {:?}", t0.elapsed());
}

use garnir::combinat::Partition;
use garnir::exactla::SparseMat;
use garnir::specht::{relation_vectors, tabloid_basis, RelationFamily};
use std::time::Instant;

fn main() {
    let p = |parts: &[usize]| Partition::new(parts.to_vec()).unwrap();
    for parts in [vec![8], vec![7, 1], vec![5, 3], vec![4, 4], vec![6, 2], vec![4,3,1], vec![3,3,2]] {
        let lam = p(&parts);
        let basis = tabloid_basis(&lam);
        let rows = relation_vectors(&basis, &RelationFamily::Classic).unwrap();
        let mat = SparseMat::new(basis.len(), rows);
        let t0 = Instant::now();
        let r = mat.rank();
        println!("lambda={lam}: exact rank {r} in {:?}", t0.elapsed());
    }
}

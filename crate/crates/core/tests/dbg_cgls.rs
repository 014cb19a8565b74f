// quick CGLS debug via the test harness
#[test]
fn dbg_cgls() {
    use saddle_core::problems::*;
    use saddle_core::sparsela::SparseMatrixDual;
    let p = generate_bilinear::<f64>(5, 7, 3, 0.7, 3).unwrap();
    let a = &p.a;
    println!("nnz={} m={} n={}", a.nnz(), a.nrows(), a.ncols());
    // r = b - A*x for random x
    let x: Vec<f64> = (0..7).map(|i| (i as f64) * 0.3 - 1.0).collect();
    let mut r = vec![0.0; 5];
    a.mat_vec(&x, &mut r);
    for (ri, bi) in r.iter_mut().zip(&p.b) { *ri = bi - *ri; }
    println!("r = {:?}", r);
    // manual CGLS with per-iteration print
    let (rows, cols) = (5usize, 7usize);
    let mut d = vec![0.0; cols];
    let mut s = r.clone();
    let mut t = vec![0.0; cols];
    a.mat_t_vec(&s, &mut t);
    let mut pvec = t.clone();
    let mut gamma: f64 = t.iter().map(|v| v*v).sum();
    let mut q = vec![0.0; rows];
    for it in 0..60 {
        a.mat_vec(&pvec, &mut q);
        let qq: f64 = q.iter().map(|v| v*v).sum();
        if qq == 0.0 { println!("qq=0 at {it}"); break; }
        let alpha = gamma / qq;
        for (di, pi) in d.iter_mut().zip(&pvec) { *di += alpha * pi; }
        for (si, qi) in s.iter_mut().zip(&q) { *si -= alpha * qi; }
        a.mat_t_vec(&s, &mut t);
        let gnew: f64 = t.iter().map(|v| v*v).sum();
        let snorm: f64 = s.iter().map(|v| v*v).sum::<f64>().sqrt();
        println!("it={it} ||s||={snorm:.3e} ||Aᵀs||={:.3e}", gnew.sqrt());
        let beta = gnew / gamma;
        for (pi, ti) in pvec.iter_mut().zip(&t) { *pi = ti + beta * *pi; }
        gamma = gnew;
        if gnew.sqrt() < 1e-14 { break; }
    }
}

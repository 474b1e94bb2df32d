use gvm::parabolic::{integral_system, lambda_of_t, maximal_parabolic};
use gvm::rootsys::{Family, RootSystem};
use gvm::rat;

fn main() {
    // E6 k=2: where does A1xA5 live?
    let rs = RootSystem::build(Family::E6, 6).unwrap();
    let pd = maximal_parabolic(&rs, 2).unwrap();
    for t in [rat(0,1), rat(3,2), rat(3,1), rat(9,2), rat(6,1)] {
        let lam = lambda_of_t(&pd, &t);
        let is = integral_system(&rs, &lam);
        println!("E6 k=2 t={t}: type={} pi_lambda={:?}", is.ctype, is.simple_system);
    }
    // E7 k=2 and k=4: where does A1xD6 live?
    let rs = RootSystem::build(Family::E7, 7).unwrap();
    for k in [2usize, 4] {
        let pd = maximal_parabolic(&rs, k).unwrap();
        for t in [rat(0,1), rat(1,2), rat(1,1), rat(3,2)] {
            let lam = lambda_of_t(&pd, &t);
            let is = integral_system(&rs, &lam);
            println!("E7 k={k} t={t}: type={}", is.ctype);
        }
    }
    // E8 k=3 at 1/2, k=5,7 at 0
    let rs = RootSystem::build(Family::E8, 8).unwrap();
    for (k, t) in [(3usize, rat(1,2)), (5, rat(0,1)), (7, rat(0,1)), (5, rat(1,1)), (7, rat(2,1))] {
        let pd = maximal_parabolic(&rs, k).unwrap();
        let lam = lambda_of_t(&pd, &t);
        let is = integral_system(&rs, &lam);
        println!("E8 k={k} t={t}: type={}", is.ctype);
    }
    // F4 k=2 at t in N
    let rs = RootSystem::build(Family::F4, 4).unwrap();
    let pd = maximal_parabolic(&rs, 2).unwrap();
    for t in [rat(0,1), rat(1,1), rat(1,2)] {
        let lam = lambda_of_t(&pd, &t);
        let is = integral_system(&rs, &lam);
        println!("F4 k=2 t={t}: type={}", is.ctype);
    }
}

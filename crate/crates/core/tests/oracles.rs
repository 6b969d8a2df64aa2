//! Values frozen from an independent 400-bit evaluation (mpmath) of the
//! closed forms.

use chpi_core::approximants::{ch_approx, heron_lower, ratio_limit, snell_huygens};
use chpi_core::polygon::quantities;
use chpi_core::series_brackets::{best_constant_probe, certify_theorem, tan_deriv11};
use chpi_core::{reference_pi, PrecisionContext, Real};

fn ctx() -> PrecisionContext {
    PrecisionContext::default()
}

fn close(got: &Real, want: &str, rel_bits: i64) {
    let c = ctx();
    let w = Real::parse(want, &c).unwrap();
    let rel = got.sub(&w, &c).unwrap().abs().div(&w.abs(), &c).unwrap();
    assert!(rel < Real::pow2(-rel_bits), "got {got}, want {want}");
}

#[test]
fn ch_values() {
    let c = ctx();
    for (n, v) in [
        (32, "3.14159268045462557075007309244883421220854239029436214708548"),
        (33, "3.14159267592176699338478403493472244795402914106336204299672"),
        (96, "3.14159265362655261231426163648490305914223212490266025762618"),
        (1024, "3.14159265358979326341210981262691570435814181799264025744882"),
        (100_000, "3.14159265358979323846264338330826758161284772443961085221431"),
    ] {
        close(&ch_approx(n, &c).unwrap(), v, 190);
    }
}

#[test]
fn relative_errors() {
    let checks = certify_theorem(&[32, 96, 1024, 100_000, 1 << 20], &ctx()).unwrap();
    let want = [
        "8.55134172203703144505933912058e-9",
        "1.17008721068960170988268350245e-11",
        "7.94166181947188121873912558187e-18",
        "9.15608756049574531856174461079e-30",
        "6.8882746879532112906033885603e-36",
    ];
    for (b, w) in checks.iter().zip(want) {
        close(&b.rel_error, w, 90);
        assert!(b.passed);
    }
}

#[test]
fn polygon_96() {
    let q = quantities(96, &ctx()).unwrap();
    close(&q.inscribed_perimeter, "3.1410319508905096381113529264596601070364122161628", 160);
    close(&q.circumscribed_perimeter, "3.1427145996453682981688590937721238710009690915112", 160);
    close(&heron_lower(96, &ctx()).unwrap(), "3.141592646083779554563694769795080824651412334012", 160);
    close(&snell_huygens(96, &ctx()).unwrap(), "3.1415928338087958581305216488971480283579311746123", 160);
}

#[test]
fn remainder_at_domain_end() {
    let c = ctx();
    let x = reference_pi(&c).unwrap().div_u64(32, &c).unwrap();
    close(&tan_deriv11(&x, &c).unwrap(), "469223.994118912310389081911213", 90);
}

#[test]
fn ratio_values() {
    let c = ctx();
    close(&ratio_limit(32, &c).unwrap(), "0.375430502804634146599518679227", 90);
    close(&ratio_limit(1024, &c).unwrap(), "0.375000420196115020803926316123", 90);
    close(&ratio_limit(1 << 16, &c).unwrap(), "0.375000000102586890428463698159", 90);
}

#[test]
fn probe_values() {
    let c = ctx();
    close(&best_constant_probe(32, &c).unwrap(), "1.00282278869047223598706197095", 90);
    close(&best_constant_probe(1_000_000, &c).unwrap(), "1.0000000000028786346169965355", 90);
}

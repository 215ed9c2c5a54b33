use mstt_core::gen::{validate_closed, Gen};
use mstt_core::mode_theory::Mode;
use mstt_core::{guarded, param};
use rand::rngs::SmallRng;
use rand::SeedableRng;

fn fuzz(
    inst: &mstt_core::instance::Instantiation,
    profile: mstt_core::gen::GenProfile,
    modes: &[&str],
    wanted: usize,
    seed: u64,
) {
    let ck = inst.checker();
    let mut rng = SmallRng::seed_from_u64(seed);
    let mut g = Gen::new(ck, &mut rng, profile);
    let (mut done, mut attempts) = (0, 0);
    while done < wanted {
        attempts += 1;
        assert!(attempts < wanted * 20, "generator rarely succeeds: {done} terms in {attempts} attempts");
        let m = Mode::new(modes[attempts % modes.len()]);
        let Some((t, ty)) = g.closed(&m, 2, 4) else { continue };
        let inferred = validate_closed(&ck, &t, &m, 5).unwrap_or_else(|e| panic!("{t} at {m}: {e}"));
        assert!(ck.ty_equiv(&ty, &inferred, &m).is_ok(), "{t}: generated for {ty}, inferred {inferred}");
        done += 1;
    }
}

#[test]
fn guarded_terms_evaluate_without_tag_errors() {
    let inst = guarded::instantiation();
    fuzz(&inst, guarded::gen_profile(), &[guarded::OMEGA, guarded::STAR], 1000, 7);
}

#[test]
fn param_terms_evaluate_without_tag_errors() {
    let inst = param::instantiation();
    fuzz(&inst, param::gen_profile(), &[param::WEDGE, param::STAR], 300, 11);
}

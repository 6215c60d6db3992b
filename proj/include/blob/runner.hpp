// Suite orchestration: runs the requested check suites for one run
// configuration and produces deterministic, id-sorted reports.
#pragma once

#include <algorithm>
#include <string>
#include <vector>

#include "blob/config.hpp"
#include "blob/lax.hpp"
#include "blob/qgroup.hpp"
#include "blob/report.hpp"
#include "blob/reps.hpp"
#include "blob/rng.hpp"
#include "blob/transfer.hpp"

namespace blob {

inline const std::vector<std::pair<std::string, std::string>>& suite_descriptions() {
    static const std::vector<std::pair<std::string, std::string>> d = {
        {"algebra", "defining relations of the blob algebra, quantum-group triples, towers, centralizer"},
        {"ybe", "Yang-Baxter equation for the baxterized R matrix"},
        {"re", "reflection equation for the boundary K matrix (two zeta values)"},
        {"conditions", "unitarity, crossing, twist compatibility, braid and constant-limit relations"},
        {"transfer", "double-row transfer commutativity, Hamiltonian, block structure, intertwiner"},
        {"symmetry", "transfer-matrix symmetry per boundary type, preserved charges, negative controls"},
        {"exchange", "exchange relations between dressed-operator blocks and charge towers"},
        {"duality", "asymptotic boundary charges vs transfer matrix and blob generators"},
        {"spectrum", "diagnostic Hamiltonian spectrum and degeneracies"},
    };
    return d;
}

class SuiteRunner {
public:
    explicit SuiteRunner(const RunConfig& cfg)
        : cfg_(cfg),
          params_(make_params(cfg.mu, cfg.Q, cfg.zeta, cfg.model, cfg.boundary)),
          rep_(make_rep(params_, cfg.num_sites)),
          lax_(LaxFactory::from_rep(rep_)) {}

    std::vector<CheckReport> run() {
        CheckList all;
        for (const auto& suite : cfg_.suites) append(all, run_suite(suite));
        std::vector<CheckReport> reports;
        reports.reserve(all.size());
        const std::string digest = cfg_.digest();
        for (const auto& c : all) {
            CheckReport r;
            r.check_id = c.id;
            r.params_digest = digest;
            r.residual = c.residual;
            const double scale = (c.tol_scale > 0.0) ? c.tol_scale : 1.0;
            r.tolerance = cfg_.tolerance * scale;
            r.notes = c.notes;
            if (c.notes.rfind("skipped", 0) == 0)
                r.passed = true;
            else if (c.notes.rfind("negative-control", 0) == 0)
                r.passed = c.residual > 1e-3;
            else
                r.passed = c.residual <= r.tolerance;
            r.elapsed_ms = 0.0; // kept deterministic so identical runs emit identical bytes
            reports.push_back(r);
        }
        std::sort(reports.begin(), reports.end(),
                  [](const CheckReport& a, const CheckReport& b) { return a.check_id < b.check_id; });
        return reports;
    }

private:
    static void append(CheckList& into, CheckList more) {
        for (auto& c : more) into.push_back(std::move(c));
    }

    LambdaSampler sampler(const std::string& suite) const {
        return LambdaSampler(fnv1a64(std::to_string(cfg_.seed) + "/" + suite), cfg_.mu);
    }

    CheckList run_suite(const std::string& name) {
        CheckList out;
        try {
            if (name == "algebra") out = run_algebra();
            else if (name == "ybe") out = run_ybe();
            else if (name == "re") out = run_re();
            else if (name == "conditions") out = run_conditions();
            else if (name == "transfer") out = run_transfer();
            else if (name == "symmetry") out = run_symmetry();
            else if (name == "exchange") out = run_exchange();
            else if (name == "duality") out = run_duality();
            else if (name == "spectrum") out = run_spectrum();
        } catch (const std::exception& e) {
            out.push_back({name + "/aborted", 1.0, std::string("construction failure: ") + e.what()});
        }
        return out;
    }

    LaxFactory perturbed_lax() const {
        CMatrix u = lax_.u_local();
        if (cfg_.model == Model::twin)
            u(3, 6) += 0.01;
        else
            u(1, 2) += 0.01;
        return LaxFactory(params_, u, lax_.e_local(), lax_.trivial_boundary());
    }

    std::vector<QRep> model_qreps() const {
        if (cfg_.model == Model::xxz) return {QRep::rho};
        return {QRep::sigma1, QRep::sigma2, QRep::rho1, QRep::rho2};
    }

    // --- suites ---------------------------------------------------------

    CheckList run_algebra() {
        CheckList out;
        for (auto c : check_blob(rep_)) out.push_back({"algebra/" + c.id, c.residual, c.notes});
        for (QRep name : model_qreps()) {
            const QGroupRep qr = qgroup_rep(name, params_);
            append(out, qgroup_relation_residuals(qr.E, qr.F, qr.H, qr.deformation,
                                                  "algebra/qrep/" + to_string(name)));
            const ChargeTower t = tower(qr, cfg_.num_sites);
            append(out, qgroup_relation_residuals(t.E, t.F, t.H, qr.deformation,
                                                  "algebra/tower/" + to_string(name)));
            for (auto c : check_centralizer_local(rep_, t)) out.push_back({"algebra/" + c.id, c.residual, c.notes});
        }
        // wrong boundary constant must break the blob quotient
        const CMatrix& u0 = rep_.u_gens.front();
        out.push_back({"algebra/negative-control/kappa-shift",
                       rel_residual(u0 * rep_.e_gen * u0, (params_.kappa + 0.1) * u0),
                       "negative-control: blob quotient with shifted kappa"});
        return out;
    }

    CheckList run_ybe() {
        CheckList out;
        auto smp = sampler("ybe");
        const auto pairs = smp.pairs(cfg_.lambda_samples);
        for (std::size_t k = 0; k < pairs.size(); ++k)
            out.push_back({"ybe/pair" + std::to_string(k), lax_.ybe_residual(pairs[k].first, pairs[k].second), ""});
        const LaxFactory bad = perturbed_lax();
        out.push_back({"ybe/negative-control/perturbed-entry", bad.ybe_residual(pairs[0].first, pairs[0].second),
                       "negative-control: generator entry perturbed by 1e-2"});
        return out;
    }

    CheckList run_re() {
        CheckList out;
        auto smp = sampler("re");
        const auto pairs = smp.pairs(cfg_.lambda_samples);
        for (std::size_t k = 0; k < pairs.size(); ++k)
            out.push_back({"re/zeta1/pair" + std::to_string(k), lax_.re_residual(pairs[k].first, pairs[k].second), ""});
        const AlgebraParams p2 = make_params(cfg_.mu, cfg_.Q, cfg_.zeta + 0.4, cfg_.model, cfg_.boundary);
        const LaxFactory lax2(p2, lax_.u_local(), lax_.e_local(), lax_.trivial_boundary());
        for (std::size_t k = 0; k < pairs.size(); ++k)
            out.push_back({"re/zeta2/pair" + std::to_string(k), lax2.re_residual(pairs[k].first, pairs[k].second), ""});
        if (lax_.trivial_boundary()) {
            // a non-solution boundary matrix must be detected
            const int d = lax_.local_dim();
            const cplx l1 = pairs[0].first, l2 = pairs[0].second;
            CMatrix kbad = CMatrix::identity(d);
            kbad(0, 1) += 0.01;
            const CMatrix id = CMatrix::identity(d);
            const CMatrix k1 = kron(kbad, id), k2 = kron(id, kbad);
            const CMatrix& perm = lax_.perm();
            const CMatrix r12m = lax_.R(l1 - l2), r12p = lax_.R(l1 + l2);
            const CMatrix r21m = perm * r12m * perm, r21p = perm * r12p * perm;
            out.push_back({"re/negative-control/perturbed-k",
                           rel_residual(r12m * k1 * r21p * k2, k2 * r12p * k1 * r21m),
                           "negative-control: boundary matrix perturbed off the solution set"});
        } else {
            AlgebraParams p3 = params_;
            p3.kappa += 0.1;
            const LaxFactory bad(p3, lax_.u_local(), lax_.e_local(), false);
            out.push_back({"re/negative-control/kappa-shift", bad.re_residual(pairs[0].first, pairs[0].second),
                           "negative-control: boundary constant kappa shifted by 0.1"});
        }
        return out;
    }

    CheckList run_conditions() {
        CheckList out;
        auto smp = sampler("conditions");
        const int n = std::min(5, cfg_.lambda_samples);
        const auto ls = smp.samples(n);
        for (int k = 0; k < n; ++k) {
            const std::string s = "/s" + std::to_string(k);
            out.push_back({"conditions/unitarity" + s, lax_.unitarity_residual(ls[k]), ""});
            out.push_back({"conditions/crossing" + s, lax_.crossing_residual(ls[k]), ""});
            out.push_back({"conditions/m-pair-comm" + s, lax_.twist_comm_residual(ls[k]), ""});
            out.push_back({"conditions/rhat-closed-form" + s,
                           rel_residual(lax_.Rhat(ls[k]), lax_.Rcheck(ls[k]) * lax_.perm()), ""});
        }
        out.push_back({"conditions/m-symmetric", lax_.twist_symmetry_residual(), ""});
        for (int sign : {+1, -1}) {
            const std::string sgn = sign > 0 ? "plus" : "minus";
            out.push_back({"conditions/braid/" + sgn + "/plain", lax_.braid_residual(sign, false), ""});
            out.push_back({"conditions/braid/" + sgn + "/hat", lax_.braid_residual(sign, true), ""});
            for (int diff : {+1, -1}) {
                const std::string dn = diff > 0 ? "plus" : "minus";
                out.push_back({"conditions/rr2/sum-" + sgn + "/diff-" + dn, lax_.constant_re_residual(sign, diff), ""});
            }
        }
        if (!lax_.trivial_boundary()) {
            for (int sign : {+1, -1}) {
                const cplx big = (sign > 0) ? cplx(30.0, 0.0) : cplx(-30.0, 0.0);
                const CMatrix approx = (1.0 / lax_.y_of(big)) * lax_.K(big);
                CheckResult c{"conditions/asymptotic-k/" + std::string(sign > 0 ? "plus" : "minus"),
                              rel_residual(approx, lax_.K_pm(sign)), ""};
                c.tol_scale = 10.0; // large-lambda limit carries an O(e^{-2 mu lambda}) tail
                out.push_back(c);
            }
        }
        {
            // an off-diagonal twist entry breaks [M1 M2, R]; diagonal
            // perturbations stay inside the commutant
            CMatrix m = lax_.twist();
            m(0, 1) += 0.05;
            const CMatrix mm = kron(m, m);
            out.push_back({"conditions/negative-control/twist-perturbed", comm_residual(mm, lax_.R(ls[0])),
                           "negative-control: off-diagonal twist entry perturbed by 5e-2"});
        }
        return out;
    }

    CheckList run_transfer() {
        CheckList out;
        auto smp = sampler("transfer");
        const DoubleRow dr(lax_, cfg_.num_sites);
        const auto pairs = smp.pairs(cfg_.lambda_samples);
        for (std::size_t k = 0; k < pairs.size(); ++k) {
            const CMatrix t1 = dr.transfer(pairs[k].first);
            const CMatrix t2 = dr.transfer(pairs[k].second);
            out.push_back({"transfer/t-commute/pair" + std::to_string(k), comm_residual(t1, t2), ""});
        }
        const int n_single = std::min(2, cfg_.lambda_samples);
        const auto ls = smp.samples(std::max(n_single, 1));
        for (int k = 0; k < n_single; ++k)
            out.push_back({"transfer/block-sum/s" + std::to_string(k),
                           rel_residual(dr.transfer(ls[k]), dr.transfer_from_blocks(ls[k])), ""});
        if (dr.local_dim() * dr.total_dim() <= 1024) {
            const auto pr = smp.sample_pair();
            out.push_back({"transfer/re-in-aux", dr.re_in_aux_residual(pr.first, pr.second), ""});
        } else {
            out.push_back({"transfer/re-in-aux", 0.0, "skipped: auxiliary-pair space above dimension cap"});
        }
        const CMatrix ham = dr.hamiltonian();
        for (int k = 0; k < n_single; ++k)
            out.push_back({"transfer/hamiltonian-commutes/s" + std::to_string(k),
                           comm_residual(ham, dr.transfer(ls[k])), ""});
        {
            std::vector<CMatrix> basis{CMatrix::identity(static_cast<int>(dr.chain_dim()))};
            for (const auto& u : rep_.u_gens) basis.push_back(u);
            if (!lax_.trivial_boundary()) basis.push_back(rep_.e_gen);
            out.push_back({"transfer/hamiltonian-span", span_fit(ham, basis).residual, ""});
        }
        if (cfg_.model == Model::xxz) {
            const int nb = std::min(5, cfg_.lambda_samples);
            for (int k = 0; k < nb; ++k) {
                const auto pr = smp.sample_pair();
                for (auto c : reflection_intertwiner_checks(lax_, pr.first, pr.second, "/pair" + std::to_string(k)))
                    out.push_back({"transfer/" + c.id, c.residual, c.notes});
            }
        } else {
            out.push_back({"transfer/bcomm", 0.0,
                           "skipped: reflection-algebra intertwiner needs an L matrix; none exists for the twin model"});
        }
        {
            const DoubleRow bad(perturbed_lax(), cfg_.num_sites);
            out.push_back({"transfer/negative-control/perturbed-u",
                           comm_residual(dr.transfer(pairs[0].first), bad.transfer(pairs[0].second)),
                           "negative-control: generator entry perturbed by 1e-2"});
        }
        return out;
    }

    CheckList run_symmetry();
    CheckList run_exchange();
    CheckList run_duality();
    CheckList run_spectrum();

    RunConfig cfg_;
    AlgebraParams params_;
    LocalRep rep_;
    LaxFactory lax_;
};

// --- symmetry ------------------------------------------------------------

inline CheckList SuiteRunner::run_symmetry() {
    CheckList out;
    auto smp = sampler("symmetry");
    const DoubleRow dr(lax_, cfg_.num_sites);
    const int n = std::min(3, cfg_.lambda_samples);
    const auto ls = smp.samples(n);
    std::vector<CMatrix> ts;
    ts.reserve(n);
    for (int k = 0; k < n; ++k) ts.push_back(dr.transfer(ls[k]));

    auto tower_checks = [&](QRep name) {
        const ChargeTower t = tower(qgroup_rep(name, params_), cfg_.num_sites);
        for (int k = 0; k < n; ++k) {
            const std::string s = "/s" + std::to_string(k);
            out.push_back({"symmetry/tower/" + to_string(name) + "/E" + s, comm_residual(ts[k], t.E), ""});
            out.push_back({"symmetry/tower/" + to_string(name) + "/F" + s, comm_residual(ts[k], t.F), ""});
            out.push_back({"symmetry/tower/" + to_string(name) + "/H" + s, comm_residual(ts[k], t.H), ""});
        }
    };
    auto charge_checks = [&](QRep name, const std::string& label) {
        const ChargeTower ct = boundary_charge(qgroup_rep(name, params_), charge_constant(name, params_),
                                               cfg_.num_sites);
        for (int k = 0; k < n; ++k)
            out.push_back({"symmetry/charge/" + label + "/s" + std::to_string(k), comm_residual(ts[k], ct.Q), ""});
    };
    auto broken_check = [&](QRep name, const std::string& label) {
        const ChargeTower t = tower(qgroup_rep(name, params_), cfg_.num_sites);
        out.push_back({"symmetry/negative-control/broken-" + label, comm_residual(ts[0], t.E),
                       "negative-control: generator outside the preserved set"});
    };
    auto xshift_check = [&](QRep name, const std::string& label) {
        const ChargeTower ct = boundary_charge(qgroup_rep(name, params_),
                                               charge_constant(name, params_) + 0.2, cfg_.num_sites);
        out.push_back({"symmetry/negative-control/x-shift-" + label, comm_residual(ts[0], ct.Q),
                       "negative-control: charge constant shifted by 0.2"});
    };

    switch (cfg_.boundary) {
        case Boundary::trivial:
            for (QRep name : model_qreps()) tower_checks(name);
            {
                const DoubleRow bad(perturbed_lax(), cfg_.num_sites);
                const ChargeTower t = tower(qgroup_rep(model_qreps().front(), params_), cfg_.num_sites);
                out.push_back({"symmetry/negative-control/perturbed-u", comm_residual(bad.transfer(ls[0]), t.E),
                               "negative-control: generator entry perturbed by 1e-2"});
            }
            break;
        case Boundary::xxz_m:
            charge_checks(QRep::rho, "q");
            broken_check(QRep::rho, "rho-E");
            xshift_check(QRep::rho, "q");
            break;
        case Boundary::type_i:
            tower_checks(QRep::sigma1);
            charge_checks(QRep::sigma2, "q");
            broken_check(QRep::sigma2, "sigma2-E");
            xshift_check(QRep::sigma2, "q");
            break;
        case Boundary::type_ii:
            tower_checks(QRep::sigma2);
            charge_checks(QRep::sigma1, "i");
            broken_check(QRep::sigma1, "sigma1-E");
            xshift_check(QRep::sigma1, "i");
            break;
        case Boundary::type_plus:
            charge_checks(QRep::sigma2, "q");
            charge_checks(QRep::sigma1, "i");
            broken_check(QRep::sigma1, "sigma1-E");
            broken_check(QRep::sigma2, "sigma2-E");
            xshift_check(QRep::sigma2, "q");
            break;
        case Boundary::type_iii:
            charge_checks(QRep::rho2, "r");
            charge_checks(QRep::rho1, "rhat");
            broken_check(QRep::sigma1, "sigma1-E");
            broken_check(QRep::rho1, "rho1-E");
            xshift_check(QRep::rho2, "r");
            break;
    }

    // local K-matrix intertwining
    auto k_intertwine_charge = [&](QRep name, const std::string& label) {
        const QGroupRep qr = qgroup_rep(name, params_);
        const CMatrix qc = local_charge(qr, charge_constant(name, params_));
        for (int k = 0; k < n; ++k)
            out.push_back({"symmetry/k-intertwine/" + label + "/s" + std::to_string(k),
                           comm_residual(qc, lax_.K(ls[k])), ""});
    };
    auto k_intertwine_triple = [&](QRep name) {
        const QGroupRep qr = qgroup_rep(name, params_);
        for (int k = 0; k < n; ++k) {
            const std::string s = "/s" + std::to_string(k);
            const CMatrix kk = lax_.K(ls[k]);
            out.push_back({"symmetry/k-intertwine/" + to_string(name) + "-E" + s, comm_residual(qr.E, kk), ""});
            out.push_back({"symmetry/k-intertwine/" + to_string(name) + "-F" + s, comm_residual(qr.F, kk), ""});
            out.push_back({"symmetry/k-intertwine/" + to_string(name) + "-H" + s, comm_residual(qr.H, kk), ""});
        }
    };
    switch (cfg_.boundary) {
        case Boundary::trivial: break;
        case Boundary::xxz_m: k_intertwine_charge(QRep::rho, "rho-Qq"); break;
        case Boundary::type_i:
            k_intertwine_charge(QRep::sigma2, "sigma2-Qq");
            k_intertwine_triple(QRep::sigma1);
            break;
        case Boundary::type_ii:
            k_intertwine_charge(QRep::sigma1, "sigma1-Qi");
            k_intertwine_triple(QRep::sigma2);
            break;
        case Boundary::type_plus:
            k_intertwine_charge(QRep::sigma2, "sigma2-Qq");
            k_intertwine_charge(QRep::sigma1, "sigma1-Qi");
            break;
        case Boundary::type_iii:
            k_intertwine_charge(QRep::rho1, "rho1-Qrhat");
            k_intertwine_charge(QRep::rho2, "rho2-Qr");
            break;
    }
    return out;
}

// --- exchange --------------------------------------------------------------

inline CheckList SuiteRunner::run_exchange() {
    CheckList out;
    auto smp = sampler("exchange");
    const DoubleRow dr(lax_, cfg_.num_sites);
    const int n = std::min(2, cfg_.lambda_samples);
    const auto ls = smp.samples(n);
    for (int k = 0; k < n; ++k) {
        const std::string tag = "/s" + std::to_string(k);
        CheckList rels;
        if (cfg_.boundary == Boundary::trivial && cfg_.model == Model::xxz)
            rels = exchange_relations_xxz(dr, params_, ls[k], tag);
        else if (cfg_.boundary == Boundary::trivial && cfg_.model == Model::twin) {
            rels = exchange_relations_twin_sigma(dr, params_, ls[k], tag);
            append(rels, exchange_relations_twin_rho(dr, params_, ls[k], tag));
        } else if (cfg_.boundary == Boundary::type_i)
            rels = exchange_relations_boundary_i(dr, params_, ls[k], tag);
        else if (cfg_.boundary == Boundary::type_ii)
            rels = exchange_relations_boundary_ii(dr, params_, ls[k], tag);
        else {
            out.push_back({"exchange/skipped", 0.0,
                           "skipped: no printed exchange relations for boundary " + to_string(cfg_.boundary)});
            break;
        }
        for (auto& c : rels) out.push_back({"exchange/" + c.id, c.residual, c.notes});
    }
    if (!out.empty() && out.front().notes.rfind("skipped", 0) != 0) {
        // flipped coefficient must be detected
        auto blocks = dr.labelled_blocks(dr.script_T(ls[0]));
        if (cfg_.model == Model::xxz) {
            const ChargeTower t = tower(qgroup_rep(QRep::rho, params_), cfg_.num_sites);
            const cplx qh = std::exp(cplx(0.0, params_.mu / 2.0));
            out.push_back({"exchange/negative-control/wrong-sign",
                           rel_residual(comm(t.E, blocks["A"]), (1.0 / qh) * (t.Hinv * blocks["C"])),
                           "negative-control: sign flipped on one relation"});
        } else {
            const ChargeTower t1 = tower(qgroup_rep(QRep::sigma1, params_), cfg_.num_sites);
            const cplx ih = std::exp(cplx(0.0, M_PI / 4.0));
            out.push_back({"exchange/negative-control/wrong-sign",
                           rel_residual(comm(t1.E, blocks["A"]), (1.0 / ih) * (t1.Hinv * blocks["C"])),
                           "negative-control: sign flipped on one relation"});
        }
    }
    return out;
}

// --- duality ---------------------------------------------------------------

inline CheckList SuiteRunner::run_duality() {
    CheckList out;
    auto smp = sampler("duality");
    const DoubleRow dr(lax_, cfg_.num_sites);
    const int n = std::min(2, cfg_.lambda_samples);
    const auto ls = smp.samples(n);
    std::vector<CMatrix> ts;
    for (int k = 0; k < n; ++k) ts.push_back(dr.transfer(ls[k]));
    const int d = dr.local_dim();
    for (int sign : {+1, -1}) {
        const std::string sgn = sign > 0 ? "plus" : "minus";
        const CMatrix limit = dr.script_T_limit(sign);
        for (int a = 0; a < d; ++a)
            for (int b = 0; b < d; ++b) {
                const CMatrix blk = dr.aux_block(limit, a, b);
                const std::string ab = std::to_string(a + 1) + std::to_string(b + 1);
                for (int k = 0; k < n; ++k)
                    out.push_back({"duality/t-comm/" + sgn + "/ab" + ab + "/s" + std::to_string(k),
                                   comm_residual(blk, ts[k]), ""});
                for (std::size_t l = 0; l < rep_.u_gens.size(); ++l)
                    out.push_back({"duality/u-comm/" + sgn + "/ab" + ab + "/u" + std::to_string(l + 1),
                                   comm_residual(blk, rep_.u_gens[l]), ""});
                if (!lax_.trivial_boundary())
                    out.push_back({"duality/e-comm/" + sgn + "/ab" + ab, comm_residual(blk, rep_.e_gen), ""});
            }
    }
    if (lax_.trivial_boundary())
        out.push_back({"duality/e-comm", 0.0, "skipped: trivial boundary carries no blob element in the limits"});
    {
        const DoubleRow bad(perturbed_lax(), cfg_.num_sites);
        const CMatrix limit = bad.script_T_limit(+1);
        double worst = 0.0;
        for (int a = 0; a < d; ++a)
            for (int b = 0; b < d; ++b) worst = std::max(worst, comm_residual(bad.aux_block(limit, a, b), ts[0]));
        out.push_back({"duality/negative-control/perturbed-u", worst,
                       "negative-control: generator entry perturbed by 1e-2"});
    }
    if (cfg_.model == Model::xxz && cfg_.boundary == Boundary::trivial && cfg_.num_sites == 2) {
        // span comparison between the asymptotic blocks and tower
        // bilinears; recorded only, the exact correspondence stays open
        std::vector<CMatrix> limit_blocks;
        for (int sign : {+1, -1}) {
            const CMatrix limit = dr.script_T_limit(sign);
            for (int a = 0; a < d; ++a)
                for (int b = 0; b < d; ++b) limit_blocks.push_back(dr.aux_block(limit, a, b));
        }
        const ChargeTower t = tower(qgroup_rep(QRep::rho, params_), cfg_.num_sites);
        const std::vector<CMatrix> candidates = {CMatrix::identity(static_cast<int>(dr.chain_dim())),
                                                 t.E * t.Hinv, t.F * t.Hinv, t.H * t.H, t.Hinv * t.Hinv};
        const int rank_blocks = gram_rank(limit_blocks);
        const int rank_candidates = gram_rank(candidates);
        std::vector<CMatrix> joint = limit_blocks;
        for (const auto& c : candidates) joint.push_back(c);
        const int rank_joint = gram_rank(joint);
        const int overlap = rank_blocks + rank_candidates - rank_joint;
        out.push_back({"duality/gram-rank", 0.0,
                       "diagnostic: rank(blocks)=" + std::to_string(rank_blocks) +
                           " rank(tower-bilinears)=" + std::to_string(rank_candidates) +
                           " rank(joint)=" + std::to_string(rank_joint) + " overlap=" + std::to_string(overlap)});
    }
    return out;
}

// --- spectrum ----------------------------------------------------------------

inline CheckList SuiteRunner::run_spectrum() {
    CheckList out;
    const DoubleRow dr(lax_, cfg_.num_sites);
    const CMatrix ham = dr.hamiltonian();
    const auto eigs = spectrum(ham);
    const auto counts = degeneracy_counts(eigs);
    std::string note = "diagnostic: " + std::to_string(counts.size()) + " clusters; multiplicities=";
    for (std::size_t k = 0; k < counts.size(); ++k) note += (k ? "," : "") + std::to_string(counts[k]);
    out.push_back({"spectrum/degeneracy", 0.0, note});

    cplx sum = 0.0;
    for (const auto& e : eigs) sum += e;
    CheckResult trace_check{"spectrum/trace-consistency",
                            std::abs(sum - trace(ham)) / std::max(1.0, std::abs(trace(ham))), ""};
    trace_check.tol_scale = 10.0;
    out.push_back(trace_check);

    std::vector<int> rev(cfg_.num_sites);
    for (int i = 0; i < cfg_.num_sites; ++i) rev[i] = cfg_.num_sites - i;
    const CMatrix conj = leg_permute(ham, rev, dr.local_dim());
    CheckResult inv{"spectrum/unitary-invariance", compare_spectra(eigs, eigenvalues(conj)), ""};
    inv.tol_scale = 10.0;
    out.push_back(inv);

    std::vector<cplx> shifted = eigs;
    for (auto& e : shifted) e += 0.01;
    out.push_back({"spectrum/negative-control/shifted-levels", compare_spectra(eigs, shifted),
                   "negative-control: all levels shifted by 1e-2"});
    return out;
}

} // namespace blob

// Copyright 2026 The QVision Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "qvision/scenarios.hpp"

#include <fmt/format.h>

#include <algorithm>
#include <charconv>
#include <cmath>
#include <numbers>
#include <set>
#include <sstream>
#include <stdexcept>

#include "qvision/errors.hpp"
#include "qvision/phototransduction.hpp"
#include "qvision/visual_pathways.hpp"

namespace qvision {

namespace {

std::string seed_line(std::uint64_t seed) {
    return fmt::format("# seed={}\n", seed);
}

std::string num(double v) {
    return fmt::format("{:.10g}", v);
}

}  // namespace

void write_artifacts(const std::filesystem::path &dir, const Artifacts &artifacts) {
    std::error_code ec;
    std::filesystem::create_directories(dir, ec);
    if (ec) {
        throw IoError("cannot create " + dir.string() + ": " + ec.message());
    }
    for (const auto &[name, bytes] : artifacts) {
        write_file(dir / name, bytes);
    }
}

int min_image_side() {
    return static_cast<int>(std::lround(field_extent_deg(CellClass::X) * kDefaultLatticePerDegree)) + 1;
}

ReceptorMosaic ingest_image(const GrayImage &image) {
    int side = min_image_side();
    if (image.width < side || image.height < side) {
        throw IoError(fmt::format("image {}x{} is smaller than one ganglion field ({}x{})", image.width, image.height,
                                  side, side));
    }
    std::vector<double> intensity(image.pixels.size());
    for (std::size_t i = 0; i < image.pixels.size(); ++i) {
        intensity[i] = std::min(1.0, static_cast<double>(image.pixels[i]) / image.maxval);
    }
    return ReceptorMosaic::from_intensities(image.width, image.height, intensity);
}

ReceptorMosaic ingest_image(const std::filesystem::path &path) {
    return ingest_image(read_image(path));
}

// ---------------------------------------------------------------------------

std::string_view to_string(CollapseLocus locus) {
    return locus == CollapseLocus::Retina ? "retina" : "cortex";
}

double default_coherence_tau(CollapseLocus locus) {
    return locus == CollapseLocus::Retina ? 1e-9 : 1e-3;
}

EchoSetup EchoSetup::for_locus(CollapseLocus locus, double dt, double floor) {
    return {locus, dt, default_coherence_tau(locus), floor};
}

void EchoSetup::validate() const {
    if (!(pulse_interval_dt >= 0.0) || !(coherence_tau > 0.0)) {
        throw std::invalid_argument("EchoSetup: dt must be >= 0 and tau > 0");
    }
    if (!(detector_floor > 0.0 && detector_floor < 1.0)) {
        throw std::invalid_argument("EchoSetup: detector floor must be in (0, 1)");
    }
}

EchoResult run_echo(const EchoSetup &setup) {
    setup.validate();
    double amplitude = std::exp(-setup.pulse_interval_dt / setup.coherence_tau);
    return {amplitude, amplitude >= setup.detector_floor};
}

// ---------------------------------------------------------------------------

TeleportBenchStats run_teleport_bench(std::size_t trials, std::uint64_t seed) {
    if (trials == 0) {
        throw std::invalid_argument("run_teleport_bench: need at least one trial");
    }
    TeleportBenchStats stats;
    stats.trials = trials;
    double total = 0.0;
    for (std::size_t i = 0; i < trials; ++i) {
        Rng rng(Rng::derive(seed, i));
        Qubit input = random_qubit(rng);
        TeleportResult r = teleport(input, rng);
        double f = fidelity(input, r.output);
        stats.min_fidelity = std::min(stats.min_fidelity, f);
        total += f;
        ++stats.outcome_counts[index_of(r.outcome)];
    }
    stats.mean_fidelity = total / static_cast<double>(trials);
    return stats;
}

// ---------------------------------------------------------------------------

std::vector<GaoTrialSpec> parse_gao_trials(std::string_view text) {
    std::vector<GaoTrialSpec> out;
    auto bad = [&](std::string_view item, const char *why) {
        return ConfigError("trials entry '" + std::string(item) + "': " + why);
    };
    while (!text.empty()) {
        std::size_t semi = text.find(';');
        std::string_view item = text.substr(0, semi);
        text = semi == std::string_view::npos ? std::string_view{} : text.substr(semi + 1);
        std::istringstream is{std::string(item)};
        std::string kind;
        if (!(is >> kind)) {
            continue;
        }
        std::vector<std::string> args;
        for (std::string a; is >> a;) {
            args.push_back(a);
        }
        auto parse_count = [&](const std::string &s) {
            std::size_t v = 0;
            auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
            if (ec != std::errc{} || p != s.data() + s.size() || v == 0) {
                throw bad(item, "count must be a positive integer");
            }
            return v;
        };
        auto parse_amp = [&](const std::string &s) {
            double v = 0.0;
            auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
            if (ec != std::errc{} || p != s.data() + s.size()) {
                throw bad(item, "amplitude must be a number");
            }
            return v;
        };
        if (kind == "definite0" || kind == "definite1") {
            if (args.size() != 1) {
                throw bad(item, "expected 'definiteN <count>'");
            }
            out.push_back({kind, Definite{kind == "definite1" ? 1 : 0}, parse_count(args[0])});
        } else if (kind == "superposition") {
            if (args.size() != 3) {
                throw bad(item, "expected 'superposition <omega0> <omega1> <count>'");
            }
            double w0 = parse_amp(args[0]);
            double w1 = parse_amp(args[1]);
            if (std::abs(w0 * w0 + w1 * w1 - 1.0) > 1e-6) {
                throw bad(item, "amplitudes are not normalized");
            }
            // Renormalize away the few digits lost in the text form.
            double n = std::hypot(w0, w1);
            out.push_back({fmt::format("superposition {} {}", args[0], args[1]), Superposition{w0 / n, w1 / n},
                           parse_count(args[2])});
        } else {
            throw bad(item, "unknown input kind");
        }
    }
    if (out.empty()) {
        throw ConfigError("trials: empty trial list");
    }
    return out;
}

std::vector<GaoSpecStats> run_gao(const GaoSetup &setup, std::span<const GaoTrialSpec> trials, std::uint64_t seed) {
    setup.validate();
    std::vector<GaoSpecStats> out;
    std::uint64_t stream = 0;
    for (const GaoTrialSpec &spec : trials) {
        GaoSpecStats s;
        s.name = spec.name;
        s.count = spec.count;
        for (std::size_t i = 0; i < spec.count; ++i) {
            Rng rng(Rng::derive(seed, stream++));
            GaoReport r = gao_distinguish(setup, spec.input, rng);
            switch (r.label) {
                case GaoLabel::Definite:
                    ++s.definite;
                    break;
                case GaoLabel::Superposition:
                    ++s.superposition;
                    break;
                case GaoLabel::Indistinguishable:
                    ++s.indistinguishable;
                    break;
            }
            if (r.collapsed_to) {
                ++(*r.collapsed_to == 0 ? s.collapsed0 : s.collapsed1);
            }
        }
        out.push_back(std::move(s));
    }
    return out;
}

// ---------------------------------------------------------------------------

ElectrodeArray::ElectrodeArray(std::vector<std::array<double, 2>> positions) : positions_(std::move(positions)) {
    if (positions_.size() != kCount) {
        throw std::invalid_argument("ElectrodeArray: expected 68 electrodes");
    }
    std::set<std::array<double, 2>> seen;
    for (const auto &p : positions_) {
        if (!(p[0] >= 0.0 && p[0] <= 1.0 && p[1] >= 0.0 && p[1] <= 1.0)) {
            throw std::invalid_argument("ElectrodeArray: position outside the unit square");
        }
        if (!seen.insert(p).second) {
            throw std::invalid_argument("ElectrodeArray: duplicate position");
        }
    }
}

ElectrodeArray ElectrodeArray::standard() {
    std::vector<std::array<double, 2>> positions;
    for (int r = 0; r < kRows; ++r) {
        for (int c = 0; c < kColumns; ++c) {
            bool corner = (r == 0 || r == kRows - 1) && (c == 0 || c == kColumns - 1);
            if (!corner) {
                positions.push_back({(c + 0.5) / kColumns, (r + 0.5) / kRows});
            }
        }
    }
    return ElectrodeArray(std::move(positions));
}

std::vector<double> sobel_magnitude(const GrayImage &image) {
    int w = image.width;
    int h = image.height;
    auto px = [&](int x, int y) {
        return image.intensity(std::clamp(x, 0, w - 1), std::clamp(y, 0, h - 1));
    };
    std::vector<double> out(static_cast<std::size_t>(w) * h);
    for (int y = 0; y < h; ++y) {
        for (int x = 0; x < w; ++x) {
            double gx = (px(x + 1, y - 1) + 2.0 * px(x + 1, y) + px(x + 1, y + 1)) -
                        (px(x - 1, y - 1) + 2.0 * px(x - 1, y) + px(x - 1, y + 1));
            double gy = (px(x - 1, y + 1) + 2.0 * px(x, y + 1) + px(x + 1, y + 1)) -
                        (px(x - 1, y - 1) + 2.0 * px(x, y - 1) + px(x + 1, y - 1));
            out[static_cast<std::size_t>(y) * w + x] = std::min(1.0, std::hypot(gx, gy) / 4.0);
        }
    }
    return out;
}

std::size_t DobelleResult::lit_count() const {
    return static_cast<std::size_t>(std::count_if(samples.begin(), samples.end(), [](const auto &s) {
        return s.lit;
    }));
}

DobelleResult run_dobelle(const GrayImage &image, const ElectrodeArray &array, const DobelleOptions &options) {
    if (image.width < 3 || image.height < 3) {
        throw IoError("dobelle: image must be at least 3x3");
    }
    if (!(options.edge_threshold > 0.0) || !(options.dot_radius_frac > 0.0) || !(options.sample_radius_frac >= 0.0)) {
        throw std::invalid_argument("dobelle: threshold and radii must be positive");
    }
    int w = image.width;
    int h = image.height;
    std::vector<double> edges = sobel_magnitude(image);

    DobelleResult result;
    result.edges = GrayImage(w, h);
    for (std::size_t i = 0; i < edges.size(); ++i) {
        result.edges.pixels[i] = static_cast<std::uint8_t>(std::lround(edges[i] * 255.0));
    }
    result.render = GrayImage(w, h, 0);

    double pitch = std::min(static_cast<double>(w) / ElectrodeArray::kColumns, static_cast<double>(h) /
                                                                                     ElectrodeArray::kRows);
    double sample_r = options.sample_radius_frac * pitch;
    double dot_r = options.dot_radius_frac * w;
    for (std::size_t i = 0; i < array.count(); ++i) {
        auto [ux, uy] = array.positions()[i];
        double cx = ux * w;
        double cy = uy * h;
        // Maximum edge strength over pixel centers within the sampling disc, plus the pixel under the electrode.
        int hx = std::clamp(static_cast<int>(std::floor(cx)), 0, w - 1);
        int hy = std::clamp(static_cast<int>(std::floor(cy)), 0, h - 1);
        double edge = edges[static_cast<std::size_t>(hy) * w + hx];
        int r_px = static_cast<int>(std::ceil(sample_r)) + 1;
        for (int y = std::max(0, hy - r_px); y <= std::min(h - 1, hy + r_px); ++y) {
            for (int x = std::max(0, hx - r_px); x <= std::min(w - 1, hx + r_px); ++x) {
                if (std::hypot(x + 0.5 - cx, y + 0.5 - cy) <= sample_r) {
                    edge = std::max(edge, edges[static_cast<std::size_t>(y) * w + x]);
                }
            }
        }
        bool lit = edge >= options.edge_threshold;
        result.samples.push_back({i, ux, uy, edge, lit});
        if (!lit) {
            continue;
        }
        result.render.at(hx, hy) = 255;
        int d_px = static_cast<int>(std::ceil(dot_r)) + 1;
        for (int y = std::max(0, hy - d_px); y <= std::min(h - 1, hy + d_px); ++y) {
            for (int x = std::max(0, hx - d_px); x <= std::min(w - 1, hx + d_px); ++x) {
                if (std::hypot(x + 0.5 - cx, y + 0.5 - cy) <= dot_r) {
                    result.render.at(x, y) = 255;
                }
            }
        }
    }
    return result;
}

// ---------------------------------------------------------------------------

Matrix2 parse_unitary(std::string_view text) {
    std::string t(text);
    if (t == "identity") {
        return CorrectionUnitary{CorrectionKind::Identity}.matrix();
    }
    if (t == "phase_flip") {
        return CorrectionUnitary{CorrectionKind::PhaseFlip}.matrix();
    }
    if (t == "bit_flip") {
        return CorrectionUnitary{CorrectionKind::BitFlip}.matrix();
    }
    if (t == "bit_phase_flip") {
        return CorrectionUnitary{CorrectionKind::BitPhaseFlip}.matrix();
    }
    std::istringstream is(t);
    std::vector<double> v;
    for (std::string tok; is >> tok;) {
        double d = 0.0;
        auto [p, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), d);
        if (ec != std::errc{} || p != tok.data() + tok.size()) {
            throw ConfigError("receiver_unitary: cannot parse '" + tok + "'");
        }
        v.push_back(d);
    }
    if (v.size() != 8) {
        throw ConfigError("receiver_unitary: expected a name or 8 numbers");
    }
    Matrix2 m{{Complex(v[0], v[1]), Complex(v[2], v[3]), Complex(v[4], v[5]), Complex(v[6], v[7])}};
    if (!m.is_unitary()) {
        throw ConfigError("receiver_unitary: matrix is not unitary within 1e-12");
    }
    return m;
}

PipelineOptions pipeline_options_from(const ScenarioConfig &config) {
    PipelineOptions o;
    o.lattice_per_degree = config.get_double("lattice_per_degree", o.lattice_per_degree);
    o.hypercolumn_spacing = static_cast<int>(config.get_int("hypercolumn_spacing", o.hypercolumn_spacing));
    if (config.has("orientation_step_deg")) {
        o.orientation_step = config.get_double("orientation_step_deg", 22.5) * std::numbers::pi / 180.0;
    }
    o.wiring.subfield_spacing = static_cast<int>(config.get_int("subfield_spacing", o.wiring.subfield_spacing));
    o.wiring.member_count = static_cast<int>(config.get_int("member_count", o.wiring.member_count));
    o.wiring.member_spacing = static_cast<int>(config.get_int("member_spacing", o.wiring.member_spacing));
    o.rates.baseline = config.get_double("baseline_rate", o.rates.baseline);
    o.rates.gain = config.get_double("rate_gain", o.rates.gain);
    long long capacity = config.get_int("lgn_capacity", static_cast<long long>(o.lgn_capacity));
    if (capacity <= 0) {
        throw ConfigError("lgn_capacity must be positive");
    }
    o.lgn_capacity = static_cast<std::size_t>(capacity);
    o.shielded = config.get_bool("shielded", o.shielded);
    o.elapsed_s = config.get_double("elapsed_s", o.elapsed_s);
    o.tau_s = config.get_double("tau_s", o.tau_s);
    o.shielding_factor = config.get_double("shielding_factor", o.shielding_factor);
    if (config.has("receiver_unitary")) {
        o.receiver_unitary = parse_unitary(config.get_string("receiver_unitary", "identity"));
    }
    if (config.has("template") && config.has("template_potential_mv")) {
        throw ConfigError("set only one of 'template' and 'template_potential_mv'");
    }
    if (config.has("template")) {
        std::vector<double> amps = config.get_doubles("template", {});
        if (amps.size() != 2) {
            throw ConfigError("template: expected an amplitude pair 'omega0, omega1'");
        }
        try {
            o.template_state = Qubit(amps[0], amps[1]);
        } catch (const std::invalid_argument &) {
            // Tolerate amplitudes written with a handful of digits.
            if (std::abs(amps[0] * amps[0] + amps[1] * amps[1] - 1.0) > 1e-6) {
                throw ConfigError("template: amplitudes are not normalized");
            }
            o.template_state = Qubit::normalized(amps[0], amps[1]);
        }
    }
    if (config.has("template_potential_mv")) {
        double v = config.get_double("template_potential_mv", kPrecodeMaxMv);
        if (!(v >= kPrecodeMinMv && v <= kPrecodeMaxMv)) {
            throw ConfigError("template_potential_mv must be in [-70, -40]");
        }
        o.template_state = precode(v);
    }
    o.template_threshold = config.get_double("template_threshold", o.template_threshold);
    o.template_label = config.get_string("template_label", o.template_label);
    return o;
}

PipelineResult run_pipeline(const GrayImage &image, const PipelineOptions &options, std::uint64_t seed) {
    ReceptorMosaic mosaic = ingest_image(image);
    int w = mosaic.width();
    int h = mosaic.height();
    int spacing = options.hypercolumn_spacing;
    if (spacing <= 0) {
        throw ConfigError("hypercolumn_spacing must be positive");
    }
    if (w < spacing || h < spacing) {
        throw IoError(fmt::format("image {}x{} is smaller than one hypercolumn ({})", w, h, spacing));
    }
    GrandmotherTemplate tmpl(options.template_state, options.template_threshold, options.template_label);

    // Both eyes view the same frame.
    DriveField drive = bipolar_relay(mosaic);

    double step = options.orientation_step > 0.0 ? options.orientation_step : std::numbers::pi / 8.0;
    int cols = w / spacing;
    int rows = h / spacing;
    HypercolumnSheet sheet =
        build_hypercolumn_sheet(cols, rows, step, spacing, {(w - cols * spacing) / 2, (h - rows * spacing) / 2});
    PipelineResult result;
    result.circuit = wire_v1(sheet, options.wiring);
    const V1Circuit &circuit = result.circuit;

    // Retina: one on-center X ganglion cell per geniculate site.
    std::vector<RetinalFiber> fibers;
    fibers.reserve(circuit.sites.size());
    RateMap lgn_rates;
    std::string retina_csv = seed_line(seed) + "cell_id,eye,x,y,drive,rate\n";
    double cx = w / 2.0;
    double cy = h / 2.0;
    for (const LgnSite &site : circuit.sites) {
        GanglionCell cell = make_ganglion_cell(site.id, CellClass::X, Polarity::OnCenter, site.position,
                                               options.lattice_per_degree);
        double d = apply_receptive_field(drive, cell);
        SpikeTrain spikes = encode_spikes(d, cell.cell_class, options.rates);
        retina_csv += fmt::format("{},{},{},{},{},{}\n", site.id, to_string(site.eye), site.position.x,
                                  site.position.y, num(d), num(spikes.rate));
        double fx = site.position.x + 0.5 - cx;
        double fy = site.position.y + 0.5 - cy;
        fibers.push_back(make_fiber(site.id, site.eye, hemiretina_for(site.eye, fx),
                                    std::hypot(fx, fy) / options.lattice_per_degree, CellClass::X));
        // The LGN relays ganglion rates unchanged.
        lgn_rates.emplace(site.id, spikes.rate);
    }
    result.lgn_cells = fibers.size();
    Allocation allocation = magnification_allocate(fibers, options.lgn_capacity);

    result.activation = v1_activation(circuit, lgn_rates, options.rates);
    const V1Activation &act = result.activation;
    result.simple_fired = static_cast<std::size_t>(std::count(act.simple_fired.begin(), act.simple_fired.end(), true));
    result.complex_fired =
        static_cast<std::size_t>(std::count(act.complex_fired.begin(), act.complex_fired.end(), true));

    std::string v1_csv = seed_line(seed) + "cell_id,kind,hypercolumn,eye,orientation_deg,fired,potential_mv\n";
    std::size_t n_orient = sheet.orientation_count();
    GrayImage bitmap(cols * static_cast<int>(n_orient), rows * 2, 0);
    for (const ComplexCell &c : circuit.complex) {
        const ColumnAddress &a = circuit.addresses[c.id()];
        double deg = c.orientation() * 180.0 / std::numbers::pi;
        for (std::uint32_t m : c.members()) {
            v1_csv += fmt::format("{},simple,{},{},{},{},{}\n", m, a.hypercolumn, to_string(a.eye), num(deg),
                                  act.simple_fired[m] ? 1 : 0, num(act.simple_mv[m]));
        }
        v1_csv += fmt::format("{},complex,{},{},{},{},{}\n", c.id(), a.hypercolumn, to_string(a.eye), num(deg),
                              act.complex_fired[c.id()] ? 1 : 0, num(act.complex_mv[c.id()]));
        if (act.complex_fired[c.id()]) {
            const Hypercolumn &hc = sheet.hypercolumns[a.hypercolumn];
            bitmap.at(hc.col * static_cast<int>(n_orient) + static_cast<int>(a.orientation_index),
                      hc.row * 2 + (a.eye == Eye::Left ? 0 : 1)) = 255;
        }
    }

    std::string blobs_csv = seed_line(seed) + "hypercolumn,x,y,blobs,spectral_tag\n";
    for (const Hypercolumn &hc : sheet.hypercolumns) {
        blobs_csv += fmt::format("{},{},{},{},{}\n", hc.index, hc.position.x, hc.position.y, hc.blobs,
                                 num(blob_response(drive, hc, spacing)));
    }

    // Associative stage: every firing orientation column teleports its pre-coded potential.
    CorticalNetwork network;
    std::string transfers_csv =
        seed_line(seed) + "channel_id,sender,receiver,outcome,fidelity,match_fidelity,fired\n";
    auto receiver_base = static_cast<NodeId>(circuit.complex.size());
    for (const ComplexCell &c : circuit.complex) {
        if (!act.complex_fired[c.id()]) {
            continue;
        }
        NodeId sender = network.add_node(c.id(), CorticalArea::V1, act.complex_mv[c.id()]);
        NodeId receiver = network.add_node(receiver_base + c.id(), CorticalArea::Area20_21);
        network.precode_node(sender);
        TeleportChannel channel(sender, receiver, options.shielded, options.elapsed_s, options.tau_s,
                                options.shielding_factor);
        std::size_t channel_id = result.transfers++;
        Rng rng(Rng::derive(seed, channel_id));
        TransferResult t = network.transfer(channel, rng);
        Qubit processed = receiver_transform(t.received, options.receiver_unitary);
        MatchResult match = grandmother_match(processed, tmpl);
        result.matches += match.fires ? 1 : 0;
        transfers_csv += fmt::format("{},{},{},{},{},{},{}\n", channel_id, sender, receiver, to_string(t.outcome),
                                     num(t.fidelity), num(match.fidelity), match.fires ? 1 : 0);
    }

    std::string summary = seed_line(seed) + "stage,metric,value\n";
    summary += fmt::format("ingest,width,{}\ningest,height,{}\n", w, h);
    summary += fmt::format("retina,ganglion_cells,{}\n", circuit.sites.size());
    summary += fmt::format("lgn,central_capacity,{}\nlgn,peripheral_capacity,{}\n", allocation.central_capacity,
                           allocation.peripheral_capacity);
    summary += fmt::format("v1,hypercolumns,{}\nv1,simple_cells,{}\nv1,simple_fired,{}\n", sheet.hypercolumns.size(),
                           circuit.simple.size(), result.simple_fired);
    summary += fmt::format("v1,complex_cells,{}\nv1,complex_fired,{}\n", circuit.complex.size(), result.complex_fired);
    summary += fmt::format("quantum,transfers,{}\nquantum,matches,{}\n", result.transfers, result.matches);

    std::string report = fmt::format("template={}\nthreshold={}\ntransfers={}\nmatches={}\nresult={}\n",
                                     tmpl.label(), num(tmpl.threshold()), result.transfers, result.matches,
                                     result.matches > 0 ? "MATCH" : "NO_MATCH");

    result.artifacts["summary.csv"] = std::move(summary);
    result.artifacts["retina.csv"] = std::move(retina_csv);
    result.artifacts["lgn_assignments.csv"] = assignment_table_csv(fibers, seed);
    result.artifacts["v1.csv"] = std::move(v1_csv);
    result.artifacts["blobs.csv"] = std::move(blobs_csv);
    result.artifacts["v1_firing.pgm"] = encode_pgm(bitmap);
    result.artifacts["transfers.csv"] = std::move(transfers_csv);
    result.artifacts["match_report.txt"] = std::move(report);
    return result;
}

// ---------------------------------------------------------------------------

namespace {

GrayImage require_image(const ScenarioConfig &config) {
    if (!config.input_image()) {
        throw ConfigError(std::string(to_string(config.scenario())) + ": an input image is required (--image)");
    }
    return read_image(*config.input_image());
}

CellClass parse_cell_class(const std::string &s) {
    if (s == "X") {
        return CellClass::X;
    }
    if (s == "Y") {
        return CellClass::Y;
    }
    if (s == "W") {
        return CellClass::W;
    }
    throw ConfigError("cell_class must be X, Y or W");
}

Artifacts run_spot_curve(const ScenarioConfig &config) {
    CellClass cls = parse_cell_class(config.get_string("cell_class", "X"));
    std::string pol = config.get_string("polarity", "on");
    if (pol != "on" && pol != "off") {
        throw ConfigError("polarity must be 'on' or 'off'");
    }
    double lpd = config.get_double("lattice_per_degree", kDefaultLatticePerDegree);
    if (!(lpd > 0.0)) {
        throw ConfigError("lattice_per_degree must be positive");
    }
    RateParams rates{config.get_double("baseline_rate", kBaselineRate), config.get_double("rate_gain", kRateGain)};
    GanglionCell cell = make_ganglion_cell(0, cls, pol == "on" ? Polarity::OnCenter : Polarity::OffCenter, {0, 0}, lpd);
    double ext = cell.field_extent_deg;
    std::vector<double> defaults = {0.0, 0.05, 0.1, 0.2, 0.3, 0.5, 0.75, 1.0, 1.5, 2.0, 3.0};
    for (double &d : defaults) {
        d *= ext;
    }
    std::vector<double> diameters = config.get_doubles("diameters_deg", defaults);
    std::vector<SpotResponse> curve;
    try {
        curve = spot_response_curve(cell, diameters, rates);
    } catch (const std::invalid_argument &e) {
        throw ConfigError(std::string("diameters_deg: ") + e.what());
    }
    bool transient = encode_spikes(0.0, cls, rates).transient;
    std::string csv = seed_line(config.seed()) + "diameter_deg,drive,rate,transient\n";
    for (const SpotResponse &s : curve) {
        csv += fmt::format("{},{},{},{}\n", num(s.diameter_deg), num(s.drive), num(s.rate), transient ? 1 : 0);
    }
    return {{"spot_curve.csv", csv}};
}

Artifacts run_echo_scenario(const ScenarioConfig &config) {
    std::string locus = config.get_string("locus", "both");
    std::vector<CollapseLocus> loci;
    if (locus == "retina" || locus == "both") {
        loci.push_back(CollapseLocus::Retina);
    }
    if (locus == "cortex" || locus == "both") {
        loci.push_back(CollapseLocus::Cortex);
    }
    if (loci.empty()) {
        throw ConfigError("locus must be retina, cortex or both");
    }
    double dt = config.get_double("dt_s", 1e-6);
    double floor = config.get_double("floor", 0.01);
    std::string csv = seed_line(config.seed()) + "locus,dt_s,tau_s,amplitude,detected\n";
    for (CollapseLocus l : loci) {
        EchoSetup setup = EchoSetup::for_locus(l, dt, floor);
        setup.coherence_tau = config.get_double("tau_s", setup.coherence_tau);
        EchoResult r;
        try {
            r = run_echo(setup);
        } catch (const std::invalid_argument &e) {
            throw ConfigError(e.what());
        }
        csv += fmt::format("{},{},{},{},{}\n", to_string(l), num(setup.pulse_interval_dt), num(setup.coherence_tau),
                           num(r.echo_amplitude), r.detected ? 1 : 0);
    }
    return {{"echo.csv", csv}};
}

Artifacts run_bench_scenario(const ScenarioConfig &config) {
    long long trials = config.get_int("trials", 10000);
    if (trials <= 0) {
        throw ConfigError("trials must be positive");
    }
    TeleportBenchStats s = run_teleport_bench(static_cast<std::size_t>(trials), config.seed());
    std::string csv = seed_line(config.seed()) + "metric,value\n";
    csv += fmt::format("trials,{}\nmin_fidelity,{}\nmean_fidelity,{}\n", s.trials, num(s.min_fidelity),
                       num(s.mean_fidelity));
    for (BellOutcome o : kBellOutcomes) {
        csv += fmt::format("count_{},{}\n", to_string(o), s.outcome_counts[index_of(o)]);
    }
    for (BellOutcome o : kBellOutcomes) {
        csv += fmt::format("frequency_{},{}\n", to_string(o), num(s.frequency(o)));
    }
    return {{"teleport_bench.csv", csv}};
}

Artifacts run_gao_scenario(const ScenarioConfig &config) {
    GaoSetup setup{config.get_double("t_p", kDefaultPerceptionTimeS), config.get_double("t_c", kDefaultCollapseTimeS),
                   config.get_double("delta_min", kDefaultDeltaMinS)};
    try {
        setup.validate();
    } catch (const std::invalid_argument &e) {
        throw ConfigError(e.what());
    }
    std::vector<GaoTrialSpec> trials = parse_gao_trials(
        config.get_string("trials", "definite0 100; superposition 0.7071067811865476 0.7071067811865476 10000"));
    std::vector<GaoSpecStats> stats = run_gao(setup, trials, config.seed());
    std::string csv = seed_line(config.seed()) +
                      "input,trials,definite,superposition,indistinguishable,collapsed0,collapsed1,frequency1\n";
    for (const GaoSpecStats &s : stats) {
        csv += fmt::format("{},{},{},{},{},{},{},{}\n", s.name, s.count, s.definite, s.superposition,
                           s.indistinguishable, s.collapsed0, s.collapsed1,
                           num(static_cast<double>(s.collapsed1) / static_cast<double>(s.count)));
    }
    return {{"gao.csv", csv}};
}

Artifacts run_dobelle_scenario(const ScenarioConfig &config) {
    GrayImage image = require_image(config);
    DobelleOptions options;
    options.edge_threshold = config.get_double("edge_threshold", options.edge_threshold);
    options.dot_radius_frac = config.get_double("dot_radius_frac", options.dot_radius_frac);
    if (!(options.edge_threshold > 0.0) || !(options.dot_radius_frac > 0.0)) {
        throw ConfigError("edge_threshold and dot_radius_frac must be positive");
    }
    DobelleResult r = run_dobelle(image, ElectrodeArray::standard(), options);
    std::string csv = seed_line(config.seed()) + "electrode,x,y,edge,lit\n";
    for (const ElectrodeSample &s : r.samples) {
        csv += fmt::format("{},{},{},{},{}\n", s.index, num(s.x), num(s.y), num(s.edge), s.lit ? 1 : 0);
    }
    // Descriptive only: the grid pitch bounds the finest resolvable detail.
    std::string summary = fmt::format(
        "electrodes={}\nlit={}\ngrid={}x{}\npitch_px={}x{}\n", r.samples.size(), r.lit_count(),
        ElectrodeArray::kColumns, ElectrodeArray::kRows, num(static_cast<double>(image.width) / ElectrodeArray::kColumns),
        num(static_cast<double>(image.height) / ElectrodeArray::kRows));
    return {{"dobelle.csv", csv},
            {"dobelle_summary.txt", summary},
            {"edges.pgm", encode_pgm(r.edges)},
            {"phosphenes.pgm", encode_pgm(r.render)}};
}

}  // namespace

Artifacts run_scenario(const ScenarioConfig &config) {
    switch (config.scenario()) {
        case Scenario::Pipeline: {
            GrayImage image = require_image(config);
            PipelineOptions options = pipeline_options_from(config);
            try {
                return run_pipeline(image, options, config.seed()).artifacts;
            } catch (const std::invalid_argument &e) {
                throw ConfigError(e.what());
            }
        }
        case Scenario::TeleportBench:
            return run_bench_scenario(config);
        case Scenario::SpotCurve:
            return run_spot_curve(config);
        case Scenario::Echo:
            return run_echo_scenario(config);
        case Scenario::Gao:
            return run_gao_scenario(config);
        case Scenario::Dobelle:
            return run_dobelle_scenario(config);
    }
    throw std::logic_error("unknown scenario");
}

}  // namespace qvision

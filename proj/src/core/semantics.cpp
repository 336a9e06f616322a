#include "core/semantics.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

#include "core/errors.hpp"
#include "core/rational.hpp"

namespace entro {

namespace {

std::size_t table_size(const std::vector<int>& sizes) {
    std::size_t total = 1;
    for (int s : sizes) total *= static_cast<std::size_t>(s);
    return total;
}

double parse_probability(const std::string& text, int line_no) {
    if (text.find('/') != std::string::npos) {
        try {
            return rat_double(parse_rat(text));
        } catch (const ParseError&) {
            throw PmfError("line " + std::to_string(line_no) + ": invalid probability '" +
                           text + "'");
        }
    }
    std::size_t consumed = 0;
    double value = 0;
    try {
        value = std::stod(text, &consumed);
    } catch (const std::exception&) {
        throw PmfError("line " + std::to_string(line_no) + ": invalid probability '" + text +
                       "'");
    }
    if (consumed != text.size())
        throw PmfError("line " + std::to_string(line_no) + ": invalid probability '" + text +
                       "'");
    return value;
}

}  // namespace

std::size_t JointPMF::cell_index(const std::vector<int>& values) const {
    std::size_t index = 0;
    for (std::size_t i = 0; i < sizes.size(); ++i)
        index = index * static_cast<std::size_t>(sizes[i]) + static_cast<std::size_t>(values[i]);
    return index;
}

double JointPMF::probability(const std::vector<int>& values) const {
    return table[cell_index(values)];
}

void validate_pmf(const JointPMF& p) {
    if (p.sizes.size() != static_cast<std::size_t>(p.ctx.size()))
        throw PmfError("alphabet size list does not match the variable count");
    for (int s : p.sizes)
        if (s < 1) throw PmfError("alphabet sizes must be at least 1");
    if (p.table.size() != table_size(p.sizes))
        throw PmfError("probability table has the wrong number of cells");
    double sum = 0;
    for (double mass : p.table) {
        if (mass < 0) throw PmfError("negative probability mass");
        sum += mass;
    }
    if (std::abs(sum - 1.0) > kPmfSumTolerance)
        throw PmfError("probability mass sums to " + std::to_string(sum) + ", not 1");
}

namespace {

int strict_int(const std::string& word, int line_no, const char* what) {
    std::size_t consumed = 0;
    int value = 0;
    try {
        value = std::stoi(word, &consumed);
    } catch (const std::exception&) {
        consumed = std::string::npos;
    }
    if (consumed != word.size())
        throw PmfError("line " + std::to_string(line_no) + ": invalid " + what + " '" + word +
                       "'");
    return value;
}

}  // namespace

JointPMF parse_pmf(const std::string& text) {
    JointPMF p;
    std::istringstream input(text);
    std::string line;
    int line_no = 0;
    bool have_header = false;
    while (std::getline(input, line)) {
        ++line_no;
        if (const auto hash = line.find('#'); hash != std::string::npos)
            line.erase(hash);
        if (line.find_first_not_of(" \t\r\n") == std::string::npos) continue;

        if (!have_header) {
            std::istringstream header(line);
            std::string word;
            header >> word;
            if (word != "vars")
                throw PmfError("line " + std::to_string(line_no) +
                               ": expected header 'vars NAME:SIZE ...'");
            std::vector<std::string> names;
            while (header >> word) {
                const auto colon = word.find(':');
                if (colon == std::string::npos || colon + 1 >= word.size())
                    throw PmfError("line " + std::to_string(line_no) +
                                   ": expected NAME:SIZE, got '" + word + "'");
                names.push_back(word.substr(0, colon));
                const int size = strict_int(word.substr(colon + 1), line_no, "alphabet size");
                if (size < 1)
                    throw PmfError("line " + std::to_string(line_no) +
                                   ": alphabet sizes must be at least 1");
                p.sizes.push_back(size);
            }
            try {
                p.ctx = VarContext(std::move(names));
            } catch (const Error& err) {
                throw PmfError("line " + std::to_string(line_no) + ": " + err.what());
            }
            if (p.ctx.size() == 0)
                throw PmfError("line " + std::to_string(line_no) +
                               ": header declares no variables");
            p.table.assign(table_size(p.sizes), 0.0);
            have_header = true;
            continue;
        }

        // Data row: values, one ':', one probability.  Pad the colon so it
        // tokenizes even when glued to a neighbor.
        std::string padded;
        for (char ch : line) {
            if (ch == ':') padded += " : ";
            else padded += ch;
        }
        std::istringstream row(padded);
        std::string word;
        std::vector<int> values;
        bool saw_colon = false;
        std::string prob_text;
        while (row >> word) {
            if (word == ":") {
                if (saw_colon)
                    throw PmfError("line " + std::to_string(line_no) + ": more than one ':'");
                saw_colon = true;
            } else if (saw_colon) {
                if (!prob_text.empty())
                    throw PmfError("line " + std::to_string(line_no) +
                                   ": more than one probability");
                prob_text = word;
            } else {
                values.push_back(strict_int(word, line_no, "value"));
            }
        }
        if (!saw_colon || prob_text.empty())
            throw PmfError("line " + std::to_string(line_no) +
                           ": expected 'v1 ... vn : probability'");
        if (values.size() != static_cast<std::size_t>(p.ctx.size()))
            throw PmfError("line " + std::to_string(line_no) + ": expected " +
                           std::to_string(p.ctx.size()) + " values");
        for (std::size_t i = 0; i < values.size(); ++i)
            if (values[i] < 0 || values[i] >= p.sizes[i])
                throw PmfError("line " + std::to_string(line_no) + ": value " +
                               std::to_string(values[i]) + " outside alphabet of " +
                               p.ctx.names[i]);
        p.table[p.cell_index(values)] = parse_probability(prob_text, line_no);
    }
    if (!have_header) throw PmfError("missing 'vars' header line");
    validate_pmf(p);
    return p;
}

std::string render_pmf(const JointPMF& p) {
    std::string out = "vars";
    for (int i = 0; i < p.ctx.size(); ++i)
        out += " " + p.ctx.names[i] + ":" + std::to_string(p.sizes[i]);
    out += '\n';
    std::vector<int> values(p.sizes.size(), 0);
    for (std::size_t cell = 0; cell < p.table.size(); ++cell) {
        if (p.table[cell] != 0.0) {
            std::string line;
            for (std::size_t i = 0; i < values.size(); ++i)
                line += std::to_string(values[i]) + " ";
            char prob[32];
            std::snprintf(prob, sizeof prob, "%.17g", p.table[cell]);
            out += line + ": " + prob + "\n";
        }
        // advance the mixed-radix counter, last variable fastest
        for (int i = static_cast<int>(values.size()) - 1; i >= 0; --i) {
            if (++values[i] < p.sizes[i]) break;
            values[i] = 0;
        }
    }
    return out;
}

EntropyVector entropy_vector(const JointPMF& p) {
    validate_pmf(p);
    const int n = p.ctx.size();
    EntropyVector out;
    out.ctx = p.ctx;
    out.h.assign((std::size_t(1) << n) - 1, 0.0);

    std::vector<int> values(n, 0);
    for (Mask subset = 1; subset <= p.ctx.full_mask(); ++subset) {
        // Marginalize onto `subset` by projecting each cell index.
        std::size_t cells = 1;
        for (int i = 0; i < n; ++i)
            if (subset & (Mask(1) << i)) cells *= static_cast<std::size_t>(p.sizes[i]);
        std::vector<double> marginal(cells, 0.0);

        std::fill(values.begin(), values.end(), 0);
        for (std::size_t cell = 0; cell < p.table.size(); ++cell) {
            std::size_t key = 0;
            for (int i = 0; i < n; ++i)
                if (subset & (Mask(1) << i))
                    key = key * static_cast<std::size_t>(p.sizes[i]) +
                          static_cast<std::size_t>(values[i]);
            marginal[key] += p.table[cell];
            for (int i = n - 1; i >= 0; --i) {
                if (++values[i] < p.sizes[i]) break;
                values[i] = 0;
            }
        }

        double entropy = 0;
        for (double mass : marginal)
            if (mass > 0) entropy -= mass * std::log2(mass);
        out.h[subset - 1] = entropy;
    }
    return out;
}

double evaluate(const LinForm& f, const EntropyVector& h) {
    if (f.ctx != h.ctx)
        throw ContextMismatchError("form and entropy vector use different contexts");
    double value = 0;
    for (const auto& [subset, c] : f.coeff) value += rat_double(c) * h.value(subset);
    return value;
}

JointPMF copy_distribution(const JointPMF& p, const std::string& a,
                           const std::vector<std::string>& b,
                           const std::vector<std::string>& c) {
    validate_pmf(p);
    Mask covered = p.ctx.bit(a);
    const Mask bmask = p.ctx.subset_mask(b);
    const Mask cmask = p.ctx.subset_mask(c);
    if ((covered & bmask) || (covered & cmask) || (bmask & cmask))
        throw PmfError("copy partition groups must be disjoint");
    covered |= bmask | cmask;
    if (covered != p.ctx.full_mask())
        throw PmfError("copy partition must cover every variable");

    const std::string copy_name = a + "_copy";
    if (p.ctx.has(copy_name))
        throw PmfError("variable name '" + copy_name + "' already in use");

    const int n = p.ctx.size();
    const int a_pos = p.ctx.index_of(a);
    const int a_size = p.sizes[a_pos];

    JointPMF q;
    std::vector<std::string> names = p.ctx.names;
    names.push_back(copy_name);
    q.ctx = VarContext(std::move(names));
    q.sizes = p.sizes;
    q.sizes.push_back(a_size);
    q.table.assign(p.table.size() * static_cast<std::size_t>(a_size), 0.0);

    // Joint (a_val, b_val) and marginal (b_val) weights, keyed by the cell
    // index with the non-participating variables zeroed.
    std::vector<double> ab_weight(p.table.size(), 0.0);
    std::vector<double> b_weight(p.table.size(), 0.0);
    std::vector<int> values(n, 0);
    auto projected_key = [&](Mask keep) {
        std::vector<int> proj = values;
        for (int i = 0; i < n; ++i)
            if (!(keep & (Mask(1) << i))) proj[i] = 0;
        return p.cell_index(proj);
    };
    for (std::size_t cell = 0; cell < p.table.size(); ++cell) {
        ab_weight[projected_key(bmask | p.ctx.bit(a))] += p.table[cell];
        b_weight[projected_key(bmask)] += p.table[cell];
        for (int i = n - 1; i >= 0; --i) {
            if (++values[i] < p.sizes[i]) break;
            values[i] = 0;
        }
    }

    // q(values, a') = p(values) * p(a' | b-part of values)
    std::fill(values.begin(), values.end(), 0);
    std::vector<int> extended(n + 1, 0);
    for (std::size_t cell = 0; cell < p.table.size(); ++cell) {
        const double mass = p.table[cell];
        if (mass > 0) {
            const double denom = b_weight[projected_key(bmask)];
            std::copy(values.begin(), values.end(), extended.begin());
            for (int a_copy = 0; a_copy < a_size; ++a_copy) {
                std::vector<int> proj = values;
                for (int i = 0; i < n; ++i)
                    if (!((bmask | p.ctx.bit(a)) & (Mask(1) << i))) proj[i] = 0;
                proj[a_pos] = a_copy;
                const double cond = denom > 0 ? ab_weight[p.cell_index(proj)] / denom : 0.0;
                extended[n] = a_copy;
                q.table[q.cell_index(extended)] = mass * cond;
            }
        }
        for (int i = n - 1; i >= 0; --i) {
            if (++values[i] < p.sizes[i]) break;
            values[i] = 0;
        }
    }
    return q;
}

JointPMF random_pmf(std::mt19937_64& rng, const VarContext& ctx,
                    const std::vector<int>& sizes) {
    JointPMF p;
    p.ctx = ctx;
    p.sizes = sizes;
    p.table.assign(table_size(sizes), 0.0);
    std::exponential_distribution<double> exp1(1.0);
    double total = 0;
    for (double& cell : p.table) {
        cell = exp1(rng);
        total += cell;
    }
    for (double& cell : p.table) cell /= total;
    return p;
}

}  // namespace entro

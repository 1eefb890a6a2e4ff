#pragma once

// Generated from the gadget tables, then curated; cells are Expr strings.

#include "gadget.hpp"

namespace ogdforge {

namespace detail {
inline Block ex(std::vector<std::string> x, std::string y, std::vector<Row> rows, std::string note = {}) {
    Block b;
    b.kind = Block::Kind::Example;
    b.x = std::move(x);
    b.y = std::move(y);
    b.rows = std::move(rows);
    b.note = std::move(note);
    return b;
}
inline Block call(std::string callee, std::vector<std::string> slots,
                  std::vector<std::pair<std::string, std::string>> params, std::vector<Row> rows) {
    Block b;
    b.kind = Block::Kind::Call;
    b.callee = std::move(callee);
    b.call_slots = std::move(slots);
    b.call_params = std::move(params);
    b.rows = std::move(rows);
    return b;
}
} // namespace detail

inline const Catalog& builtin_catalog() {
    using detail::call;
    using detail::ex;
    using W = Erratum::Where;
    static const Catalog cat = [] {
        Catalog c;
        {
            GadgetSpec g;
            g.name = "reset";
            g.table = "reset";
            g.family = Family::Hinge;
            g.slots = {"i1"};
            g.params = {};
            g.tracked = {"i1"};
            g.blocks = {
                ex({"-2"}, "1",
                   {{{"-1"}, {"-1"}}, {{"1"}, {"-1"}}}),
                ex({"1"}, "1",
                   {{{"-1"}, {"0"}}, {{"-1"}, {"0"}}}, "add trick"),
            };
            for (const auto& e : g.errata) erratum_cell(g, e) = e.corrected;
            c.push_back(std::move(g));
        }
        {
            GadgetSpec g;
            g.name = "not";
            g.table = "not";
            g.family = Family::Hinge;
            g.slots = {"i1"};
            g.params = {};
            g.tracked = {"i1"};
            g.blocks = {
                ex({"4"}, "1",
                   {{{"-1"}, {"3"}}, {{"1"}, {"1"}}}),
                ex({"-2"}, "1",
                   {{{"3"}, {"1"}}, {{"1"}, {"-1"}}}, "add trick"),
            };
            for (const auto& e : g.errata) erratum_cell(g, e) = e.corrected;
            c.push_back(std::move(g));
        }
        {
            GadgetSpec g;
            g.name = "bias_correction";
            g.table = "bias";
            g.family = Family::Hinge;
            g.slots = {"b1", "b2"};
            g.params = {};
            g.tracked = {"b1", "b2"};
            g.blocks = {
                ex({"-1", "-1"}, "1",
                   {{{"-1", "-1"}, {"-1", "-1"}}, {{"0", "0"}, {"-1", "-1"}}}),
                ex({"-1", "-1"}, "-1",
                   {{{"-1", "-1"}, {"0", "0"}}, {{"-1", "-1"}, {"0", "0"}}}),
            };
            for (const auto& e : g.errata) erratum_cell(g, e) = e.corrected;
            c.push_back(std::move(g));
        }
        {
            GadgetSpec g;
            g.name = "copy";
            g.table = "cpy";
            g.family = Family::Hinge;
            g.slots = {"i1", "i2"};
            g.params = {};
            g.tracked = {"i1", "i2"};
            g.blocks = {
                ex({"-4", "2"}, "1",
                   {{{"-1", "0"}, {"-1", "0"}}, {{"1", "0"}, {"-3", "2"}}}),
                ex({"2", "0"}, "1",
                   {{{"-1", "0"}, {"1", "0"}}, {{"-3", "2"}, {"-1", "2"}}}, "add trick"),
                call("not", {"i1"}, {},
                     {{{"1", "0"}, {"-1", "0"}}, {{"-1", "2"}, {"1", "2"}}}),
                ex({"0", "-1"}, "1",
                   {{{"-1", "0"}, {"-1", "-1"}}, {{"1", "2"}, {"1", "1"}}}, "add trick"),
            };
            for (const auto& e : g.errata) erratum_cell(g, e) = e.corrected;
            c.push_back(std::move(g));
        }
        {
            GadgetSpec g;
            g.name = "destructive_nand";
            g.table = "dnand";
            g.family = Family::Hinge;
            g.slots = {"i1", "i2", "i3"};
            g.params = {};
            g.tracked = {"i1", "i2", "i3"};
            g.blocks = {
                ex({"0", "0", "-1"}, "1",
                   {{{"-1", "-1", "0"}, {"-1", "-1", "-1"}}, {{"-1", "1", "0"}, {"-1", "1", "-1"}}, {{"1", "-1", "0"}, {"1", "-1", "-1"}}, {{"1", "1", "0"}, {"1", "1", "-1"}}}, "add trick"),
                ex({"-2", "-2", "-2"}, "1",
                   {{{"-1", "-1", "-1"}, {"-1", "-1", "-1"}}, {{"-1", "1", "-1"}, {"-1", "1", "-1"}}, {{"1", "-1", "-1"}, {"1", "-1", "-1"}}, {{"1", "1", "-1"}, {"-1", "-1", "-3"}}}),
                call("reset", {"i1"}, {},
                     {{{"-1", "-1", "-1"}, {"0", "-1", "-1"}}, {{"-1", "1", "-1"}, {"0", "1", "-1"}}, {{"1", "-1", "-1"}, {"0", "-1", "-1"}}, {{"-1", "-1", "-3"}, {"0", "-1", "-3"}}}),
                call("reset", {"i2"}, {},
                     {{{"0", "-1", "-1"}, {"0", "0", "-1"}}, {{"0", "1", "-1"}, {"0", "0", "-1"}}, {{"0", "-1", "-1"}, {"0", "0", "-1"}}, {{"0", "-1", "-3"}, {"0", "0", "-3"}}}),
                ex({"0", "0", "2"}, "1",
                   {{{"0", "0", "-1"}, {"0", "0", "1"}}, {{"0", "0", "-1"}, {"0", "0", "1"}}, {{"0", "0", "-1"}, {"0", "0", "1"}}, {{"0", "0", "-3"}, {"0", "0", "-1"}}}, "add trick"),
            };
            for (const auto& e : g.errata) erratum_cell(g, e) = e.corrected;
            c.push_back(std::move(g));
        }
        {
            GadgetSpec g;
            g.name = "input_false";
            g.table = "inputF";
            g.family = Family::Hinge;
            g.slots = {"i1"};
            g.params = {};
            g.tracked = {"i1"};
            g.blocks = {
                ex({"-1/4"}, "1",
                   {{{"-1"}, {"-5/4"}}, {{"0"}, {"-1/4"}}, {{"1"}, {"3/4"}}}),
                ex({"-1"}, "1",
                   {{{"-5/4"}, {"-5/4"}}, {{"-1/4"}, {"-5/4"}}, {{"3/4"}, {"-1/4"}}}),
                ex({"-3"}, "1",
                   {{{"-5/4"}, {"-5/4"}}, {{"-5/4"}, {"-5/4"}}, {{"-1/4"}, {"-13/4"}}}),
                ex({"9/4"}, "1",
                   {{{"-5/4"}, {"1"}}, {{"-5/4"}, {"1"}}, {{"-13/4"}, {"-1"}}}, "add trick"),
                call("not", {"i1"}, {},
                     {{{"1"}, {"-1"}}, {{"1"}, {"-1"}}, {{"-1"}, {"1"}}}),
            };
            for (const auto& e : g.errata) erratum_cell(g, e) = e.corrected;
            c.push_back(std::move(g));
        }
        {
            GadgetSpec g;
            g.name = "set_if_true";
            g.table = "setiftrue";
            g.family = Family::Hinge;
            g.slots = {"i1", "i2"};
            g.params = {};
            g.tracked = {"i1", "i2"};
            g.blocks = {
                ex({"-4", "1"}, "1",
                   {{{"-1", "0"}, {"-1", "0"}}, {{"1", "0"}, {"-3", "1"}}}),
                ex({"2", "0"}, "1",
                   {{{"-1", "0"}, {"1", "0"}}, {{"-3", "1"}, {"-1", "1"}}}, "add trick"),
                call("not", {"i1"}, {},
                     {{{"1", "0"}, {"-1", "0"}}, {{"-1", "1"}, {"1", "1"}}}),
            };
            for (const auto& e : g.errata) erratum_cell(g, e) = e.corrected;
            c.push_back(std::move(g));
        }
        {
            GadgetSpec g;
            g.name = "rreset";
            g.table = "rreset";
            g.family = Family::Regularized;
            g.slots = {"i1"};
            g.params = {"e1"};
            g.tracked = {"i1"};
            g.blocks = {
                ex({"1/(2 e1 a^2)"}, "1",
                   {{{"-e1"}, {"1/(2 e1 a^2) - e1 a"}}, {{"e1"}, {"1/(2 e1 a^2) + e1 a"}}}),
                ex({"2 e1 a^2"}, "1",
                   {{{"1/(2 e1 a^2) - e1 a"}, {"1/(2 e1 a) + e1 a^2"}}, {{"1/(2 e1 a^2) + e1 a"}, {"1/(2 e1 a) + e1 a^2"}}}),
                ex({"-1/(2 e1) - e1 a^3"}, "1",
                   {{{"1/(2 e1 a) + e1 a^2"}, {"0"}}, {{"1/(2 e1 a) + e1 a^2"}, {"0"}}}),
            };
            for (const auto& e : g.errata) erratum_cell(g, e) = e.corrected;
            c.push_back(std::move(g));
        }
        {
            GadgetSpec g;
            g.name = "rcopy";
            g.table = "rcopy";
            g.family = Family::Regularized;
            g.slots = {"i1", "i2", "i3"};
            g.params = {"e1"};
            g.tracked = {"i1", "i2", "i3"};
            g.blocks = {
                ex({"2/e1", "-2", "-2"}, "1",
                   {{{"-e1", "0", "0"}, {"2/e1 - e1 a", "-2", "-2"}}, {{"e1", "0", "0"}, {"e1 a", "0", "0"}}}),
                ex({"-a/e1", "a", "a"}, "1",
                   {{{"2/e1 - e1 a", "-2", "-2"}, {"a/e1 - e1 a^2", "-a", "-a"}}, {{"e1 a", "0", "0"}, {"-a/e1 + e1 a^2", "a", "a"}}}),
                call("rreset", {"i1"}, {{"e1", "a/e1 - e1 a^2"}},
                     {{{"a/e1 - e1 a^2", "-a", "-a"}, {"0", "-a^4", "-a^4"}}, {{"-a/e1 + e1 a^2", "a", "a"}, {"0", "a^4", "a^4"}}}),
            };
            g.returns = {{"i2", "a^4"}, {"i3", "a^4"}};
            for (const auto& e : g.errata) erratum_cell(g, e) = e.corrected;
            c.push_back(std::move(g));
        }
        {
            GadgetSpec g;
            g.name = "rdnand";
            g.table = "rdnand";
            g.family = Family::Regularized;
            g.slots = {"i1", "i2", "i3"};
            g.params = {"e1", "e2"};
            g.tracked = {"i1", "i2", "i3"};
            g.blocks = {
                ex({"0", "0", "-1"}, "1",
                   {{{"-e1", "-e2", "0"}, {"-e1 a", "-e2 a", "-1"}}, {{"-e1", "e2", "0"}, {"-e1 a", "e2 a", "-1"}}, {{"e1", "-e2", "0"}, {"e1 a", "-e2 a", "-1"}}, {{"e1", "e2", "0"}, {"e1 a", "e2 a", "-1"}}}),
                ex({"-4/(e1 a)", "-4/(e2 a)", "-2 a"}, "1",
                   {{{"-e1 a", "-e2 a", "-1"}, {"-e1 a^2", "-e2 a^2", "-a"}}, {{"-e1 a", "e2 a", "-1"}, {"-e1 a^2", "e2 a^2", "-a"}}, {{"e1 a", "-e2 a", "-1"}, {"e1 a^2", "-e2 a^2", "-a"}}, {{"e1 a", "e2 a", "-1"}, {"-4/(e1 a) + e1 a^2", "-4/(e2 a) + e2 a^2", "-3 a"}}}),
                ex({"4/e1", "0", "0"}, "1",
                   {{{"-e1 a^2", "-e2 a^2", "-a"}, {"4/e1 - e1 a^3", "-e2 a^3", "-a^2"}}, {{"-e1 a^2", "e2 a^2", "-a"}, {"4/e1 - e1 a^3", "e2 a^3", "-a^2"}}, {{"e1 a^2", "-e2 a^2", "-a"}, {"e1 a^3", "-e2 a^3", "-a^2"}}, {{"-4/(e1 a) + e1 a^2", "-4/(e2 a) + e2 a^2", "-3 a"}, {"e1 a^3", "-4/e2 + e2 a^3", "-3 a^2"}}}),
                ex({"0", "4 a/e2", "0"}, "1",
                   {{{"4/e1 - e1 a^3", "-e2 a^3", "-a^2"}, {"4 a/e1 - e1 a^4", "4 a/e2 - e2 a^4", "-a^3"}}, {{"4/e1 - e1 a^3", "e2 a^3", "-a^2"}, {"4 a/e1 - e1 a^4", "e2 a^4", "-a^3"}}, {{"e1 a^3", "-e2 a^3", "-a^2"}, {"e1 a^4", "4 a/e2 - e2 a^4", "-a^3"}}, {{"e1 a^3", "-4/e2 + e2 a^3", "-3 a^2"}, {"e1 a^4", "e2 a^4", "-3 a^3"}}}),
                ex({"-2 a^2/e1", "0", "0"}, "1",
                   {{{"4 a/e1 - e1 a^4", "4 a/e2 - e2 a^4", "-a^3"}, {"2 a^2/e1 - e1 a^5", "4 a^2/e2 - e2 a^5", "-a^4"}}, {{"4 a/e1 - e1 a^4", "e2 a^4", "-a^3"}, {"2 a^2/e1 - e1 a^5", "e2 a^5", "-a^4"}}, {{"e1 a^4", "4 a/e2 - e2 a^4", "-a^3"}, {"-2 a^2/e1 + e1 a^5", "4 a^2/e2 - e2 a^5", "-a^4"}}, {{"e1 a^4", "e2 a^4", "-3 a^3"}, {"-2 a^2/e1 + e1 a^5", "e2 a^5", "-3 a^4"}}}),
                call("rreset", {"i1"}, {{"e1", "2 a^2/e1 - e1 a^5"}},
                     {{{"2 a^2/e1 - e1 a^5", "4 a^2/e2 - e2 a^5", "-a^4"}, {"0", "4 a^5/e2 - e2 a^8", "-a^7"}}, {{"2 a^2/e1 - e1 a^5", "e2 a^5", "-a^4"}, {"0", "e2 a^8", "-a^7"}}, {{"-2 a^2/e1 + e1 a^5", "4 a^2/e2 - e2 a^5", "-a^4"}, {"0", "4 a^5/e2 - e2 a^8", "-a^7"}}, {{"-2 a^2/e1 + e1 a^5", "e2 a^5", "-3 a^4"}, {"0", "e2 a^8", "-3 a^7"}}}),
                ex({"0", "-2 a^6/e1", "0"}, "1",
                   {{{"0", "4 a^5/e2 - e2 a^8", "-a^7"}, {"0", "2 a^6/e2 - e2 a^9", "-a^8"}}, {{"0", "e2 a^8", "-a^7"}, {"0", "-2 a^6/e2 + e2 a^9", "-a^8"}}, {{"0", "4 a^5/e2 - e2 a^8", "-a^7"}, {"0", "2 a^6/e2 - e2 a^9", "-a^8"}}, {{"0", "e2 a^8", "-3 a^7"}, {"0", "-2 a^6/e2 + e2 a^9", "-3 a^8"}}}),
                call("rreset", {"i2"}, {{"e1", "2 a^6/e2 - e2 a^9"}},
                     {{{"0", "2 a^6/e2 - e2 a^9", "-a^8"}, {"0", "0", "-a^11"}}, {{"0", "-2 a^6/e2 + e2 a^9", "-a^8"}, {"0", "0", "-a^11"}}, {{"0", "2 a^6/e2 - e2 a^9", "-a^8"}, {"0", "0", "-a^11"}}, {{"0", "-2 a^6/e2 + e2 a^9", "-3 a^8"}, {"0", "0", "-3 a^11"}}}),
                ex({"0", "0", "2 a^12"}, "1",
                   {{{"0", "0", "-a^11"}, {"0", "0", "a^12"}}, {{"0", "0", "-a^11"}, {"0", "0", "a^12"}}, {{"0", "0", "-a^11"}, {"0", "0", "a^12"}}, {{"0", "0", "-3 a^11"}, {"0", "0", "-a^12"}}}),
            };
            g.returns = {{"i3", "a^12"}};
            g.errata.push_back({"rdnand-x7", W::X, 6, 0, 1, "", "-2 a^6/e1", "-2 a^6/e2",
                                 "read of i2 is scaled by its own magnitude e2, as the after-column shows"});
            for (const auto& e : g.errata) erratum_cell(g, e) = e.corrected;
            c.push_back(std::move(g));
        }
        {
            GadgetSpec g;
            g.name = "rinput_false";
            g.table = "rinputF";
            g.family = Family::Regularized;
            g.slots = {"i1"};
            g.params = {"e1"};
            g.tracked = {"i1"};
            g.blocks = {
                ex({"-1/e1 - e1 a"}, "1",
                   {{{"-e1"}, {"-e1 a"}}, {{"0"}, {"-1/e1 - e1 a"}}, {{"e1"}, {"-1/e1"}}}),
                ex({"-a/e1"}, "1",
                   {{{"-e1 a"}, {"-a/e1 - e1 a^2"}}, {{"-1/e1 - e1 a"}, {"-a/e1 - e1 a^2"}}, {{"-1/e1"}, {"-a/e1"}}}),
                ex({"a/e1 + e1 a^3/2"}, "1",
                   {{{"-a/e1 - e1 a^2"}, {"-e1 a^3/2"}}, {{"-a/e1 - e1 a^2"}, {"-e1 a^3/2"}}, {{"-a/e1"}, {"e1 a^3/2"}}}),
            };
            g.returns = {{"i1", "e1 a^3/2"}};
            g.errata.push_back({"rinput_false-x3", W::X, 2, 0, 0, "", "a/e1 + e1 a^3/2", "a^2/e1 + e1 a^3/2",
                                 "third example must carry a^2/e1 to cancel the decayed -a^2/e1 term; the tabulated after-column already assumes it"});
            for (const auto& e : g.errata) erratum_cell(g, e) = e.corrected;
            c.push_back(std::move(g));
        }
        {
            GadgetSpec g;
            g.name = "rset_if_true";
            g.table = "rsetiftrue";
            g.family = Family::Regularized;
            g.slots = {"i1", "i2"};
            g.params = {"e1"};
            g.tracked = {"i1", "i2"};
            g.blocks = {
                ex({"-1/e1 - e1 a", "1"}, "1",
                   {{{"-e1", "0"}, {"-e1 a", "0"}}, {{"e1", "0"}, {"-1/e1", "1"}}}),
                ex({"-a/e1", "0"}, "1",
                   {{{"-e1 a", "0"}, {"-a/e1 - e1 a^2", "0"}}, {{"-1/e1", "1"}, {"-a/e1", "a"}}}),
                ex({"a^2/e1 + e1 a^3/2", "0"}, "1",
                   {{{"-a/e1 - e1 a^2", "0"}, {"-e1 a^3/2", "0"}}, {{"-a/e1", "a"}, {"e1 a^3/2", "a^2"}}}),
            };
            g.returns = {{"i1", "e1 a^3/2"}, {"i2", "a^2"}};
            for (const auto& e : g.errata) erratum_cell(g, e) = e.corrected;
            c.push_back(std::move(g));
        }
        {
            GadgetSpec g;
            g.name = "reset";
            g.table = "reset1";
            g.family = Family::DenseRelu;
            g.slots = {"i1"};
            g.params = {};
            g.tracked = {"i1"};
            g.blocks = {
                ex({"1"}, "0",
                   {{{"-1"}, {"-1"}}, {{"1"}, {"-1"}}}),
                ex({"-1"}, "1/2",
                   {{{"-1"}, {"0"}}, {{"-1"}, {"0"}}}),
            };
            for (const auto& e : g.errata) erratum_cell(g, e) = e.corrected;
            c.push_back(std::move(g));
        }
        {
            GadgetSpec g;
            g.name = "not";
            g.table = "not1";
            g.family = Family::DenseRelu;
            g.slots = {"i1"};
            g.params = {};
            g.tracked = {"i1"};
            g.blocks = {
                ex({"1"}, "-2",
                   {{{"-1"}, {"-1"}}, {{"1"}, {"-5"}}}),
                ex({"-1/2"}, "-3/2",
                   {{{"-1"}, {"1"}}, {{"-5"}, {"-1"}}}),
            };
            for (const auto& e : g.errata) erratum_cell(g, e) = e.corrected;
            c.push_back(std::move(g));
        }
        {
            GadgetSpec g;
            g.name = "copy";
            g.table = "copy1";
            g.family = Family::DenseRelu;
            g.slots = {"i1", "i2"};
            g.params = {};
            g.tracked = {"i1", "i2"};
            g.blocks = {
                ex({"1", "-1"}, "7/8",
                   {{{"-1", "0"}, {"-1", "0"}}, {{"1", "0"}, {"3/4", "1/4"}}}),
                ex({"-1", "1"}, "7/8",
                   {{{"-1", "0"}, {"-3/4", "-1/4"}}, {{"3/4", "1/4"}, {"3/4", "1/4"}}}),
                ex({"-1", "0"}, "7/8",
                   {{{"-3/4", "-1/4"}, {"-1", "-1/4"}}, {{"3/4", "1/4"}, {"3/4", "1/4"}}}),
                ex({"1", "0"}, "7/8",
                   {{{"-1", "-1/4"}, {"-1", "-1/4"}}, {{"3/4", "1/4"}, {"1", "1/4"}}}),
                ex({"0", "-1"}, "5/8",
                   {{{"-1", "-1/4"}, {"-1", "-1"}}, {{"1", "1/4"}, {"1", "1/4"}}}),
                ex({"0", "1"}, "5/8",
                   {{{"-1", "-1"}, {"-1", "-1"}}, {{"1", "1/4"}, {"1", "1"}}}),
            };
            for (const auto& e : g.errata) erratum_cell(g, e) = e.corrected;
            c.push_back(std::move(g));
        }
        {
            GadgetSpec g;
            g.name = "destructive_nand";
            g.table = "dnand1";
            g.family = Family::DenseRelu;
            g.slots = {"i1", "i2", "i3", "i4"};
            g.params = {};
            g.tracked = {"i1", "i2", "i3", "i4"};
            g.blocks = {
                ex({"-1", "0", "0", "0"}, "3/2",
                   {{{"-1", "-1", "0", "1"}, {"-2", "-1", "0", "1"}}, {{"-1", "1", "0", "1"}, {"-2", "1", "0", "1"}}, {{"1", "-1", "0", "1"}, {"1", "-1", "0", "1"}}, {{"1", "1", "0", "1"}, {"1", "1", "0", "1"}}}),
                ex({"0", "-1", "0", "0"}, "3/2",
                   {{{"-2", "-1", "0", "1"}, {"-2", "-2", "0", "1"}}, {{"-2", "1", "0", "1"}, {"-2", "1", "0", "1"}}, {{"1", "-1", "0", "1"}, {"1", "-2", "0", "1"}}, {{"1", "1", "0", "1"}, {"1", "1", "0", "1"}}}),
                ex({"1", "1", "1", "0"}, "1/2",
                   {{{"-2", "-2", "0", "1"}, {"-2", "-2", "0", "1"}}, {{"-2", "1", "0", "1"}, {"-2", "1", "0", "1"}}, {{"1", "-2", "0", "1"}, {"1", "-2", "0", "1"}}, {{"1", "1", "0", "1"}, {"-2", "-2", "-3", "1"}}}),
                ex({"-1", "0", "0", "0"}, "1/2",
                   {{{"-2", "-2", "0", "1"}, {"1", "-2", "0", "1"}}, {{"-2", "1", "0", "1"}, {"1", "1", "0", "1"}}, {{"1", "-2", "0", "1"}, {"1", "-2", "0", "1"}}, {{"-2", "-2", "-3", "1"}, {"1", "-2", "-3", "1"}}}),
                ex({"1", "0", "0", "0"}, "1/2",
                   {{{"1", "-2", "0", "1"}, {"0", "-2", "0", "1"}}, {{"1", "1", "0", "1"}, {"0", "1", "0", "1"}}, {{"1", "-2", "0", "1"}, {"0", "-2", "0", "1"}}, {{"1", "-2", "-3", "1"}, {"0", "-2", "-3", "1"}}}),
                ex({"0", "-1", "0", "0"}, "1/2",
                   {{{"0", "-2", "0", "1"}, {"0", "1", "0", "1"}}, {{"0", "1", "0", "1"}, {"0", "1", "0", "1"}}, {{"0", "-2", "0", "1"}, {"0", "1", "0", "1"}}, {{"0", "-2", "-3", "1"}, {"0", "1", "-3", "1"}}}),
                ex({"0", "1", "0", "0"}, "1/2",
                   {{{"0", "1", "0", "1"}, {"0", "0", "0", "1"}}, {{"0", "1", "0", "1"}, {"0", "0", "0", "1"}}, {{"0", "1", "0", "1"}, {"0", "0", "0", "1"}}, {{"0", "1", "-3", "1"}, {"0", "0", "-3", "1"}}}),
                ex({"0", "0", "1", "1"}, "-3/2",
                   {{{"0", "0", "0", "1"}, {"0", "0", "-5", "-4"}}, {{"0", "0", "0", "1"}, {"0", "0", "-5", "-4"}}, {{"0", "0", "0", "1"}, {"0", "0", "-5", "-4"}}, {{"0", "0", "-3", "1"}, {"0", "0", "-3", "1"}}}),
                ex({"0", "0", "-1", "0"}, "2",
                   {{{"0", "0", "-5", "-4"}, {"0", "0", "1", "-4"}}, {{"0", "0", "-5", "-4"}, {"0", "0", "1", "-4"}}, {{"0", "0", "-5", "-4"}, {"0", "0", "1", "-4"}}, {{"0", "0", "-3", "1"}, {"0", "0", "-1", "1"}}}),
                ex({"0", "0", "0", "-1"}, "3/2",
                   {{{"0", "0", "1", "-4"}, {"0", "0", "1", "1"}}, {{"0", "0", "1", "-4"}, {"0", "0", "1", "1"}}, {{"0", "0", "1", "-4"}, {"0", "0", "1", "1"}}, {{"0", "0", "-1", "1"}, {"0", "0", "-1", "1"}}}),
            };
            for (const auto& e : g.errata) erratum_cell(g, e) = e.corrected;
            c.push_back(std::move(g));
        }
        {
            GadgetSpec g;
            g.name = "set_false_if_unset";
            g.table = "set1";
            g.family = Family::DenseRelu;
            g.slots = {"i1", "i2"};
            g.params = {};
            g.tracked = {"i1", "i2"};
            g.blocks = {
                ex({"1", "1/2"}, "0",
                   {{{"-1", "1"}, {"-1", "1"}}, {{"0", "1"}, {"-1", "1/2"}}, {{"1", "1"}, {"-2", "-1/2"}}}),
                ex({"0", "1"}, "0",
                   {{{"-1", "1"}, {"-1", "-1"}}, {{"-1", "1/2"}, {"-1", "-1/2"}}, {{"-2", "-1/2"}, {"-2", "-1/2"}}}),
                ex({"0", "-2"}, "3/2",
                   {{{"-1", "-1"}, {"-1", "1"}}, {{"-1", "-1/2"}, {"-1", "-5/2"}}, {{"-2", "-1/2"}, {"-2", "-5/2"}}}),
                ex({"0", "-1"}, "3/4",
                   {{{"-1", "1"}, {"-1", "1"}}, {{"-1", "-5/2"}, {"-1", "1"}}, {{"-2", "-5/2"}, {"-2", "1"}}}),
                ex({"-1", "0"}, "3/4",
                   {{{"-1", "1"}, {"-1/2", "1"}}, {{"-1", "1"}, {"-1/2", "1"}}, {{"-2", "1"}, {"1/2", "1"}}}),
                ex({"-1", "0"}, "3/4",
                   {{{"-1/2", "1"}, {"-1", "1"}}, {{"-1/2", "1"}, {"-1", "1"}}, {{"1/2", "1"}, {"1/2", "1"}}}),
                ex({"1", "0"}, "3/4",
                   {{{"-1", "1"}, {"-1", "1"}}, {{"-1", "1"}, {"-1", "1"}}, {{"1/2", "1"}, {"1", "1"}}}),
            };
            for (const auto& e : g.errata) erratum_cell(g, e) = e.corrected;
            c.push_back(std::move(g));
        }
        {
            GadgetSpec g;
            g.name = "set_if_true";
            g.table = "trset1";
            g.family = Family::DenseRelu;
            g.slots = {"i1", "i2"};
            g.params = {};
            g.tracked = {"i1", "i2"};
            g.blocks = {
                ex({"1", "-2"}, "3/4",
                   {{{"-1", "0"}, {"-1", "0"}}, {{"1", "0"}, {"1/2", "1"}}}),
                ex({"1", "0"}, "3/4",
                   {{{"-1", "0"}, {"-1", "0"}}, {{"1/2", "1"}, {"1", "1"}}}),
            };
            for (const auto& e : g.errata) erratum_cell(g, e) = e.corrected;
            c.push_back(std::move(g));
        }
        {
            GadgetSpec g;
            g.name = "reset";
            g.table = "reset2";
            g.family = Family::DenseReluDense;
            g.slots = {"i1", "i2"};
            g.params = {};
            g.tracked = {"i1", "i2", "v"};
            g.blocks = {
                ex({"1", "0"}, "3/4",
                   {{{"-1", "1", "1"}, {"-1", "1", "1"}}, {{"1", "1", "1"}, {"1/2", "1", "1/2"}}}),
                ex({"0", "1"}, "1",
                   {{{"-1", "1", "1"}, {"-1", "1", "1"}}, {{"1/2", "1", "1/2"}, {"1/2", "3/2", "3/2"}}}),
                ex({"0", "1"}, "17/4",
                   {{{"-1", "1", "1"}, {"-1", "15/2", "15/2"}}, {{"1/2", "3/2", "3/2"}, {"1/2", "15/2", "15/2"}}}),
                ex({"0", "2/15"}, "17/4",
                   {{{"-1", "15/2", "15/2"}, {"-1", "1", "1"}}, {{"1/2", "15/2", "15/2"}, {"1/2", "1", "1"}}}),
                ex({"1", "0"}, "-1/4",
                   {{{"-1", "1", "1"}, {"-1", "1", "1"}}, {{"1/2", "1", "1"}, {"-1", "1", "1/4"}}}),
                ex({"0", "1"}, "3/4",
                   {{{"-1", "1", "1"}, {"-1", "1/2", "1/2"}}, {{"-1", "1", "1/4"}, {"-1", "5/4", "5/4"}}}),
                ex({"0", "1"}, "31/16",
                   {{{"-1", "1/2", "1/2"}, {"-1", "35/16", "35/16"}}, {{"-1", "5/4", "5/4"}, {"-1", "35/16", "35/16"}}}),
                ex({"0", "16/35"}, "51/32",
                   {{{"-1", "35/16", "35/16"}, {"-1", "1", "1"}}, {{"-1", "35/16", "35/16"}, {"-1", "1", "1"}}}),
                ex({"-1", "0"}, "3/4",
                   {{{"-1", "1", "1"}, {"-1/2", "1", "1/2"}}, {{"-1", "1", "1"}, {"-1/2", "1", "1/2"}}}),
                ex({"0", "1"}, "1",
                   {{{"-1/2", "1", "1/2"}, {"-1/2", "3/2", "3/2"}}, {{"-1/2", "1", "1/2"}, {"-1/2", "3/2", "3/2"}}}),
                ex({"0", "2/3"}, "5/4",
                   {{{"-1/2", "3/2", "3/2"}, {"-1/2", "1", "1"}}, {{"-1/2", "3/2", "3/2"}, {"-1/2", "1", "1"}}}),
                ex({"-1", "0"}, "1/4",
                   {{{"-1/2", "1", "1"}, {"0", "1", "3/4"}}, {{"-1/2", "1", "1"}, {"0", "1", "3/4"}}}),
                ex({"0", "1"}, "5/4",
                   {{{"0", "1", "3/4"}, {"0", "7/4", "7/4"}}, {{"0", "1", "3/4"}, {"0", "7/4", "7/4"}}}),
                ex({"0", "4/7"}, "11/8",
                   {{{"0", "7/4", "7/4"}, {"0", "1", "1"}}, {{"0", "7/4", "7/4"}, {"0", "1", "1"}}}),
            };
            for (const auto& e : g.errata) erratum_cell(g, e) = e.corrected;
            c.push_back(std::move(g));
        }
        {
            GadgetSpec g;
            g.name = "not";
            g.table = "not2";
            g.family = Family::DenseReluDense;
            g.slots = {"i1", "i2"};
            g.params = {};
            g.tracked = {"i1", "i2", "v"};
            g.blocks = {
                ex({"1", "0"}, "-4",
                   {{{"-1", "1", "1"}, {"-1", "1", "1"}}, {{"1", "1", "1"}, {"-9", "1", "-9"}}}),
                ex({"0", "1"}, "-17/2",
                   {{{"-1", "1", "1"}, {"-1", "-18", "-18"}}, {{"-9", "1", "-9"}, {"-9", "-8", "-8"}}}),
                ex({"0", "-1"}, "-1063/2",
                   {{{"-1", "-18", "-18"}, {"-1", "-7488", "-7488"}}, {{"-9", "-8", "-8"}, {"-9", "-7488", "-7488"}}}),
                ex({"0", "-1/7488"}, "-7487/2",
                   {{{"-1", "-7488", "-7488"}, {"-1", "1", "1"}}, {{"-9", "-7488", "-7488"}, {"-9", "1", "1"}}}),
                ex({"-1/2", "0"}, "3/2",
                   {{{"-1", "1", "1"}, {"-2", "1", "2"}}, {{"-9", "1", "1"}, {"-6", "1", "-26"}}}),
                ex({"0", "1"}, "5/2",
                   {{{"-2", "1", "2"}, {"-2", "3", "3"}}, {{"-6", "1", "-26"}, {"-6", "-1481", "31"}}}),
                ex({"0", "-1"}, "91803/2",
                   {{{"-2", "3", "3"}, {"-2", "3", "3"}}, {{"-6", "-1481", "31"}, {"-6", "-1450", "-1450"}}}),
                ex({"0", "-1/1450"}, "1447/2",
                   {{{"-2", "3", "3"}, {"-2", "3", "3"}}, {{"-6", "-1450", "-1450"}, {"-6", "3", "3"}}}),
                ex({"0", "1/3"}, "2",
                   {{{"-2", "3", "3"}, {"-2", "1", "1"}}, {{"-6", "3", "3"}, {"-6", "1", "1"}}}),
                ex({"-1/2", "0"}, "-2",
                   {{{"-2", "1", "1"}, {"1", "1", "-5"}}, {{"-6", "1", "1"}, {"-1", "1", "-29"}}}),
                ex({"0", "1"}, "-9/2",
                   {{{"1", "1", "-5"}, {"1", "-4", "-4"}}, {{"-1", "1", "-29"}, {"-1", "-1420", "20"}}}),
                ex({"0", "-1"}, "56799/2",
                   {{{"1", "-4", "-4"}, {"1", "227320", "227320"}}, {{"-1", "-1420", "20"}, {"-1", "-1400", "-1400"}}}),
                ex({"0", "1/227320"}, "112960",
                   {{{"1", "227320", "227320"}, {"1", "-1400", "-1400"}}, {{"-1", "-1400", "-1400"}, {"-1", "-1400", "-1400"}}}),
                ex({"0", "-1/1400"}, "1399/2",
                   {{{"1", "-1400", "-1400"}, {"1", "1", "1"}}, {{"-1", "-1400", "-1400"}, {"-1", "1", "1"}}}),
            };
            g.errata.push_back({"drd-not-y7", W::Y, 6, 0, 0, "", "91803/2", "91821/2",
                                 "with (w_i2, v) = (-1481, 31) the tabulated result (-1450, -1450) needs gradient factor 1, i.e. y = 45911 - 1/2"});
            g.errata.push_back({"drd-not-y8", W::Y, 7, 0, 0, "", "1447/2", "-1447/2",
                                 "sign dropped: rescaling -1450 to 3 needs y = (s - (s - 3)/2) with s = -1450, same pattern as block 4"});
            g.errata.push_back({"drd-not-y14", W::Y, 13, 0, 0, "", "1399/2", "-1399/2",
                                 "sign dropped: rescaling -1400 to 1 needs y = (s + 1)/2 with s = -1400, same pattern as block 4"});
            for (const auto& e : g.errata) erratum_cell(g, e) = e.corrected;
            c.push_back(std::move(g));
        }
        {
            GadgetSpec g;
            g.name = "copy";
            g.table = "copy2";
            g.family = Family::DenseReluDense;
            g.slots = {"i1", "i2", "i3"};
            g.params = {};
            g.constants = {{"rho", "48545/1024"}};
            g.tracked = {"i1", "i2", "i3", "v"};
            g.blocks = {
                ex({"1", "-1", "0"}, "7/8",
                   {{{"-1", "0", "1", "1"}, {"-1", "0", "1", "1"}}, {{"1", "0", "1", "1"}, {"3/4", "1/4", "1", "3/4"}}}),
                ex({"0", "0", "1"}, "5/4",
                   {{{"-1", "0", "1", "1"}, {"-1", "0", "3/2", "3/2"}}, {{"3/4", "1/4", "1", "3/4"}, {"3/4", "1/4", "7/4", "7/4"}}}),
                ex({"0", "0", "1"}, "119/16",
                   {{{"-1", "0", "3/2", "3/2"}, {"-1", "0", "273/16", "273/16"}}, {{"3/4", "1/4", "7/4", "7/4"}, {"3/4", "1/4", "273/16", "273/16"}}}),
                ex({"0", "0", "16/273"}, "289/32",
                   {{{"-1", "0", "273/16", "273/16"}, {"-1", "0", "1", "1"}}, {{"3/4", "1/4", "273/16", "273/16"}, {"3/4", "1/4", "1", "1"}}}),
                ex({"-1", "1", "0"}, "7/8",
                   {{{"-1", "0", "1", "1"}, {"-3/4", "-1/4", "1", "3/4"}}, {{"3/4", "1/4", "1", "1"}, {"3/4", "1/4", "1", "1"}}}),
                ex({"0", "0", "1"}, "5/4",
                   {{{"-3/4", "-1/4", "1", "3/4"}, {"-3/4", "-1/4", "7/4", "7/4"}}, {{"3/4", "1/4", "1", "1"}, {"3/4", "1/4", "3/2", "3/2"}}}),
                ex({"0", "0", "1"}, "119/16",
                   {{{"-3/4", "-1/4", "7/4", "7/4"}, {"-3/4", "-1/4", "273/16", "273/16"}}, {{"3/4", "1/4", "3/2", "3/2"}, {"3/4", "1/4", "273/16", "273/16"}}}),
                ex({"0", "0", "16/273"}, "289/32",
                   {{{"-3/4", "-1/4", "273/16", "273/16"}, {"-3/4", "-1/4", "1", "1"}}, {{"3/4", "1/4", "273/16", "273/16"}, {"3/4", "1/4", "1", "1"}}}),
                ex({"-1", "0", "0"}, "7/8",
                   {{{"-3/4", "-1/4", "1", "1"}, {"-1", "-1/4", "1", "19/16"}}, {{"3/4", "1/4", "1", "1"}, {"3/4", "1/4", "1", "1"}}}),
                ex({"0", "0", "1"}, "27/16",
                   {{{"-1", "-1/4", "1", "19/16"}, {"-1", "-1/4", "35/16", "35/16"}}, {{"3/4", "1/4", "1", "1"}, {"3/4", "1/4", "19/8", "19/8"}}}),
                ex({"0", "0", "1"}, "3871/256",
                   {{{"-1", "-1/4", "35/16", "35/16"}, {"-1", "-1/4", "rho", "rho"}}, {{"3/4", "1/4", "19/8", "19/8"}, {"3/4", "1/4", "rho", "rho"}}}),
                ex({"0", "0", "1/rho"}, "(rho +1)/2",
                   {{{"-1", "-1/4", "rho", "rho"}, {"-1", "-1/4", "1", "1"}}, {{"3/4", "1/4", "rho", "rho"}, {"3/4", "1/4", "1", "1"}}}),
                ex({"1", "0", "0"}, "7/8",
                   {{{"-1", "-1/4", "1", "1"}, {"-1", "-1/4", "1", "1"}}, {{"3/4", "1/4", "1", "1"}, {"1", "1/4", "1", "19/16"}}}),
                ex({"0", "0", "1"}, "27/16",
                   {{{"-1", "-1/4", "1", "1"}, {"-1", "-1/4", "19/8", "19/8"}}, {{"1", "1/4", "1", "19/16"}, {"1", "1/4", "35/16", "35/16"}}}),
                ex({"0", "0", "1"}, "3871/256",
                   {{{"-1", "-1/4", "19/8", "19/8"}, {"-1", "-1/4", "rho", "rho"}}, {{"1", "1/4", "35/16", "35/16"}, {"1", "1/4", "rho", "rho"}}}),
                ex({"0", "0", "1/rho"}, "(rho +1)/2",
                   {{{"-1", "-1/4", "rho", "rho"}, {"-1", "-1/4", "1", "1"}}, {{"1", "1/4", "rho", "rho"}, {"1", "1/4", "1", "1"}}}),
                ex({"0", "-1", "0"}, "5/8",
                   {{{"-1", "-1/4", "1", "1"}, {"-1", "-1", "1", "19/16"}}, {{"1", "1/4", "1", "1"}, {"1", "1/4", "1", "1"}}}),
                ex({"0", "0", "1"}, "27/16",
                   {{{"-1", "-1", "1", "19/16"}, {"-1", "-1", "35/16", "35/16"}}, {{"1", "1/4", "1", "1"}, {"1", "1/4", "19/8", "19/8"}}}),
                ex({"0", "0", "1"}, "3871/256",
                   {{{"-1", "-1", "35/16", "35/16"}, {"-1", "-1", "rho", "rho"}}, {{"1", "1/4", "19/8", "19/8"}, {"1", "1/4", "rho", "rho"}}}),
                ex({"0", "0", "1/rho"}, "(rho +1)/2",
                   {{{"-1", "-1", "rho", "rho"}, {"-1", "-1", "1", "1"}}, {{"1", "1/4", "rho", "rho"}, {"1", "1/4", "1", "1"}}}),
                ex({"0", "1", "0"}, "5/8",
                   {{{"-1", "-1", "1", "1"}, {"-1", "-1", "1", "1"}}, {{"1", "1/4", "1", "1"}, {"1", "1", "1", "19/16"}}}),
                ex({"0", "0", "1"}, "27/16",
                   {{{"-1", "-1", "1", "1"}, {"-1", "-1", "19/8", "19/8"}}, {{"1", "1", "1", "19/16"}, {"1", "1", "35/16", "35/16"}}}),
                ex({"0", "0", "1"}, "3871/256",
                   {{{"-1", "-1", "19/8", "19/8"}, {"-1", "-1", "rho", "rho"}}, {{"1", "1", "35/16", "35/16"}, {"1", "1", "rho", "rho"}}}),
                ex({"0", "0", "1/rho"}, "(rho +1)/2",
                   {{{"-1", "-1", "rho", "rho"}, {"-1", "-1", "1", "1"}}, {{"1", "1", "rho", "rho"}, {"1", "1", "1", "1"}}}),
            };
            g.errata.push_back({"drd-copy-rho", W::Constant, 0, 0, 0, "rho", "47 + 1272583/3125000", "48545/1024",
                                 "tabulated constant is an 8-digit decimal truncation of 48545/1024 = (35/16)(1387/64) = (19/8)(2555/128)"});
            for (const auto& e : g.errata) erratum_cell(g, e) = e.corrected;
            c.push_back(std::move(g));
        }
        {
            GadgetSpec g;
            g.name = "destructive_nand";
            g.table = "dnand2";
            g.family = Family::DenseReluDense;
            g.slots = {"i1", "i2", "i3", "i4"};
            g.params = {};
            g.tracked = {"i1", "i2", "i3", "i4", "v"};
            g.blocks = {
                ex({"-1", "0", "0", "0"}, "3/2",
                   {{{"-1", "-1", "0", "1", "1"}, {"-2", "-1", "0", "1", "2"}}, {{"-1", "1", "0", "1", "1"}, {"-2", "1", "0", "1", "2"}}, {{"1", "-1", "0", "1", "1"}, {"1", "-1", "0", "1", "1"}}, {{"1", "1", "0", "1", "1"}, {"1", "1", "0", "1", "1"}}}),
                ex({"0", "0", "0", "1"}, "5/2",
                   {{{"-2", "-1", "0", "1", "2"}, {"-2", "-1", "0", "3", "3"}}, {{"-2", "1", "0", "1", "2"}, {"-2", "1", "0", "3", "3"}}, {{"1", "-1", "0", "1", "1"}, {"1", "-1", "0", "4", "4"}}, {{"1", "1", "0", "1", "1"}, {"1", "1", "0", "4", "4"}}}),
                ex({"0", "0", "0", "1"}, "73/2",
                   {{{"-2", "-1", "0", "3", "3"}, {"-2", "-1", "0", "168", "168"}}, {{"-2", "1", "0", "3", "3"}, {"-2", "1", "0", "168", "168"}}, {{"1", "-1", "0", "4", "4"}, {"1", "-1", "0", "168", "168"}}, {{"1", "1", "0", "4", "4"}, {"1", "1", "0", "168", "168"}}}),
                ex({"0", "0", "0", "1/168"}, "169/2",
                   {{{"-2", "-1", "0", "168", "168"}, {"-2", "-1", "0", "1", "1"}}, {{"-2", "1", "0", "168", "168"}, {"-2", "1", "0", "1", "1"}}, {{"1", "-1", "0", "168", "168"}, {"1", "-1", "0", "1", "1"}}, {{"1", "1", "0", "168", "168"}, {"1", "1", "0", "1", "1"}}}),
                ex({"0", "-1", "0", "0"}, "3/2",
                   {{{"-2", "-1", "0", "1", "1"}, {"-2", "-2", "0", "1", "2"}}, {{"-2", "1", "0", "1", "1"}, {"-2", "1", "0", "1", "1"}}, {{"1", "-1", "0", "1", "1"}, {"1", "-2", "0", "1", "2"}}, {{"1", "1", "0", "1", "1"}, {"1", "1", "0", "1", "1"}}}),
                ex({"0", "0", "0", "1"}, "5/2",
                   {{{"-2", "-2", "0", "1", "2"}, {"-2", "-2", "0", "3", "3"}}, {{"-2", "1", "0", "1", "1"}, {"-2", "1", "0", "4", "4"}}, {{"1", "-2", "0", "1", "2"}, {"1", "-2", "0", "3", "3"}}, {{"1", "1", "0", "1", "1"}, {"1", "1", "0", "4", "4"}}}),
                ex({"0", "0", "0", "1"}, "73/2",
                   {{{"-2", "-2", "0", "3", "3"}, {"-2", "-2", "0", "168", "168"}}, {{"-2", "1", "0", "4", "4"}, {"-2", "1", "0", "168", "168"}}, {{"1", "-2", "0", "3", "3"}, {"1", "-2", "0", "168", "168"}}, {{"1", "1", "0", "4", "4"}, {"1", "1", "0", "168", "168"}}}),
                ex({"0", "0", "0", "1/168"}, "169/2",
                   {{{"-2", "-2", "0", "168", "168"}, {"-2", "-2", "0", "1", "1"}}, {{"-2", "1", "0", "168", "168"}, {"-2", "1", "0", "1", "1"}}, {{"1", "-2", "0", "168", "168"}, {"1", "-2", "0", "1", "1"}}, {{"1", "1", "0", "168", "168"}, {"1", "1", "0", "1", "1"}}}),
                ex({"1", "1", "1", "0"}, "1/2",
                   {{{"-2", "-2", "0", "1", "1"}, {"-2", "-2", "0", "1", "1"}}, {{"-2", "1", "0", "1", "1"}, {"-2", "1", "0", "1", "1"}}, {{"1", "-2", "0", "1", "1"}, {"1", "-2", "0", "1", "1"}}, {{"1", "1", "0", "1", "1"}, {"-2", "-2", "-3", "1", "-5"}}}),
                ex({"0", "0", "0", "1"}, "-9/4",
                   {{{"-2", "-2", "0", "1", "1"}, {"-2", "-2", "0", "-10", "-10"}}, {{"-2", "1", "0", "1", "1"}, {"-2", "1", "0", "-10", "-10"}}, {{"1", "-2", "0", "1", "1"}, {"1", "-2", "0", "-10", "-10"}}, {{"-2", "-2", "-3", "1", "-5"}, {"-2", "-2", "-3", "-4", "-4"}}}),
                ex({"0", "0", "0", "-1"}, "-311/2",
                   {{{"-2", "-2", "0", "-10", "-10"}, {"-2", "-2", "0", "-1120", "-1120"}}, {{"-2", "1", "0", "-10", "-10"}, {"-2", "1", "0", "-1120", "-1120"}}, {{"1", "-2", "0", "-10", "-10"}, {"1", "-2", "0", "-1120", "-1120"}}, {{"-2", "-2", "-3", "-4", "-4"}, {"-2", "-2", "-3", "-1120", "-1120"}}}),
                ex({"0", "0", "0", "-1/1120"}, "-1119/2",
                   {{{"-2", "-2", "0", "-1120", "-1120"}, {"-2", "-2", "0", "1", "1"}}, {{"-2", "1", "0", "-1120", "-1120"}, {"-2", "1", "0", "1", "1"}}, {{"1", "-2", "0", "-1120", "-1120"}, {"1", "-2", "0", "1", "1"}}, {{"-2", "-2", "-3", "-1120", "-1120"}, {"-2", "-2", "-3", "1", "1"}}}),
                ex({"-1", "0", "0", "0"}, "1/2",
                   {{{"-2", "-2", "0", "1", "1"}, {"1", "-2", "0", "1", "-5"}}, {{"-2", "1", "0", "1", "1"}, {"1", "1", "0", "1", "-5"}}, {{"1", "-2", "0", "1", "1"}, {"1", "-2", "0", "1", "1"}}, {{"-2", "-2", "-3", "1", "1"}, {"1", "-2", "-3", "1", "-5"}}}),
                ex({"0", "0", "0", "1"}, "-9/2",
                   {{{"1", "-2", "0", "1", "-5"}, {"1", "-2", "0", "-4", "-4"}}, {{"1", "1", "0", "1", "-5"}, {"1", "1", "0", "-4", "-4"}}, {{"1", "-2", "0", "1", "1"}, {"1", "-2", "0", "-10", "-10"}}, {{"1", "-2", "-3", "1", "-5"}, {"1", "-2", "-3", "-4", "-4"}}}),
                ex({"0", "0", "0", "-1"}, "-311/2",
                   {{{"1", "-2", "0", "-4", "-4"}, {"1", "-2", "0", "-1120", "-1120"}}, {{"1", "1", "0", "-4", "-4"}, {"1", "1", "0", "-1120", "-1120"}}, {{"1", "-2", "0", "-10", "-10"}, {"1", "-2", "0", "-1120", "-1120"}}, {{"1", "-2", "-3", "-4", "-4"}, {"1", "-2", "-3", "-1120", "-1120"}}}),
                ex({"0", "0", "0", "-1/1120"}, "-1119/2",
                   {{{"1", "-2", "0", "-1120", "-1120"}, {"1", "-2", "0", "1", "1"}}, {{"1", "1", "0", "-1120", "-1120"}, {"1", "1", "0", "1", "1"}}, {{"1", "-2", "0", "-1120", "-1120"}, {"1", "-2", "0", "1", "1"}}, {{"1", "-2", "-3", "-1120", "-1120"}, {"1", "-2", "-3", "1", "1"}}}),
                ex({"1", "0", "0", "0"}, "1/2",
                   {{{"1", "-2", "0", "1", "1"}, {"0", "-2", "0", "1", "0"}}, {{"1", "1", "0", "1", "1"}, {"0", "1", "0", "1", "0"}}, {{"1", "-2", "0", "1", "1"}, {"0", "-2", "0", "1", "0"}}, {{"1", "-2", "-3", "1", "1"}, {"0", "-2", "-3", "1", "0"}}}),
                ex({"0", "0", "0", "1"}, "1/2",
                   {{{"0", "-2", "0", "1", "0"}, {"0", "-2", "0", "1", "1"}}, {{"0", "1", "0", "1", "0"}, {"0", "1", "0", "1", "1"}}, {{"0", "-2", "0", "1", "0"}, {"0", "-2", "0", "1", "1"}}, {{"0", "-2", "-3", "1", "0"}, {"0", "-2", "-3", "1", "1"}}}),
                ex({"0", "-1", "0", "0"}, "1/2",
                   {{{"0", "-2", "0", "1", "1"}, {"0", "1", "0", "1", "-5"}}, {{"0", "1", "0", "1", "1"}, {"0", "1", "0", "1", "1"}}, {{"0", "-2", "0", "1", "1"}, {"0", "1", "0", "1", "-5"}}, {{"0", "-2", "-3", "1", "1"}, {"0", "1", "-3", "1", "-5"}}}),
                ex({"0", "0", "0", "1"}, "-9/2",
                   {{{"0", "1", "0", "1", "-5"}, {"0", "1", "0", "-4", "-4"}}, {{"0", "1", "0", "1", "1"}, {"0", "1", "0", "-10", "-10"}}, {{"0", "1", "0", "1", "-5"}, {"0", "1", "0", "-4", "-4"}}, {{"0", "1", "-3", "1", "-5"}, {"0", "1", "-3", "-4", "-4"}}}),
                ex({"0", "0", "0", "-1"}, "-311/2",
                   {{{"0", "1", "0", "-4", "-4"}, {"0", "1", "0", "-1120", "-1120"}}, {{"0", "1", "0", "-10", "-10"}, {"0", "1", "0", "-1120", "-1120"}}, {{"0", "1", "0", "-4", "-4"}, {"0", "1", "0", "-1120", "-1120"}}, {{"0", "1", "-3", "-4", "-4"}, {"0", "1", "-3", "-1120", "-1120"}}}),
                ex({"0", "0", "0", "-1/1120"}, "-1119/2",
                   {{{"0", "1", "0", "-1120", "-1120"}, {"0", "1", "0", "1", "1"}}, {{"0", "1", "0", "-1120", "-1120"}, {"0", "1", "0", "1", "1"}}, {{"0", "1", "0", "-1120", "-1120"}, {"0", "1", "0", "1", "1"}}, {{"0", "1", "-3", "-1120", "-1120"}, {"0", "1", "-3", "1", "1"}}}),
                ex({"0", "1", "0", "0"}, "1/2",
                   {{{"0", "1", "0", "1", "1"}, {"0", "0", "0", "1", "0"}}, {{"0", "1", "0", "1", "1"}, {"0", "0", "0", "1", "0"}}, {{"0", "1", "0", "1", "1"}, {"0", "0", "0", "1", "0"}}, {{"0", "1", "-3", "1", "1"}, {"0", "0", "-3", "1", "0"}}}),
                ex({"0", "0", "0", "1"}, "1/2",
                   {{{"0", "0", "0", "1", "0"}, {"0", "0", "0", "1", "1"}}, {{"0", "0", "0", "1", "0"}, {"0", "0", "0", "1", "1"}}, {{"0", "0", "0", "1", "0"}, {"0", "0", "0", "1", "1"}}, {{"0", "0", "-3", "1", "0"}, {"0", "0", "-3", "1", "1"}}}),
                ex({"0", "0", "1", "1"}, "-3/2",
                   {{{"0", "0", "0", "1", "1"}, {"0", "0", "-5", "-4", "-4"}}, {{"0", "0", "0", "1", "1"}, {"0", "0", "-5", "-4", "-4"}}, {{"0", "0", "0", "1", "1"}, {"0", "0", "-5", "-4", "-4"}}, {{"0", "0", "-3", "1", "1"}, {"0", "0", "-3", "1", "1"}}}),
                ex({"0", "0", "0", "-1/4"}, "-3/2",
                   {{{"0", "0", "-5", "-4", "-4"}, {"0", "0", "-5", "1", "1"}}, {{"0", "0", "-5", "-4", "-4"}, {"0", "0", "-5", "1", "1"}}, {{"0", "0", "-5", "-4", "-4"}, {"0", "0", "-5", "1", "1"}}, {{"0", "0", "-3", "1", "1"}, {"0", "0", "-3", "1", "1"}}}),
                ex({"0", "0", "-1", "0"}, "2",
                   {{{"0", "0", "-5", "1", "1"}, {"0", "0", "1", "1", "-29"}}, {{"0", "0", "-5", "1", "1"}, {"0", "0", "1", "1", "-29"}}, {{"0", "0", "-5", "1", "1"}, {"0", "0", "1", "1", "-29"}}, {{"0", "0", "-3", "1", "1"}, {"0", "0", "-1", "1", "-5"}}}),
                ex({"0", "0", "0", "1"}, "-57/2",
                   {{{"0", "0", "1", "1", "-29"}, {"0", "0", "1", "-28", "-28"}}, {{"0", "0", "1", "1", "-29"}, {"0", "0", "1", "-28", "-28"}}, {{"0", "0", "1", "1", "-29"}, {"0", "0", "1", "-28", "-28"}}, {{"0", "0", "-1", "1", "-5"}, {"0", "0", "-1", "236", "-52"}}}),
                ex({"0", "0", "0", "1"}, "-24543/2",
                   {{{"0", "0", "1", "-28", "-28"}, {"0", "0", "1", "-28", "-28"}}, {{"0", "0", "1", "-28", "-28"}, {"0", "0", "1", "-28", "-28"}}, {{"0", "0", "1", "-28", "-28"}, {"0", "0", "1", "-28", "-28"}}, {{"0", "0", "-1", "236", "-52"}, {"0", "0", "-1", "184", "184"}}}),
                ex({"0", "0", "0", "1/184"}, "78",
                   {{{"0", "0", "1", "-28", "-28"}, {"0", "0", "1", "-28", "-28"}}, {{"0", "0", "1", "-28", "-28"}, {"0", "0", "1", "-28", "-28"}}, {{"0", "0", "1", "-28", "-28"}, {"0", "0", "1", "-28", "-28"}}, {{"0", "0", "-1", "184", "184"}, {"0", "0", "-1", "-28", "-28"}}}),
                ex({"0", "0", "0", "-1/28"}, "-27/2",
                   {{{"0", "0", "1", "-28", "-28"}, {"0", "0", "1", "1", "1"}}, {{"0", "0", "1", "-28", "-28"}, {"0", "0", "1", "1", "1"}}, {{"0", "0", "1", "-28", "-28"}, {"0", "0", "1", "1", "1"}}, {{"0", "0", "-1", "-28", "-28"}, {"0", "0", "-1", "1", "1"}}}),
            };
            g.errata.push_back({"drd-dnand-y10", W::Y, 9, 0, 0, "", "-9/4", "-9/2",
                                 "tabulated results (-10,-10) and (-4,-4) from (1,1) and (1,-5) both need y = -9/2, the value the identical fix-up in block 14 uses"});
            for (const auto& e : g.errata) erratum_cell(g, e) = e.corrected;
            c.push_back(std::move(g));
        }
        {
            GadgetSpec g;
            g.name = "set_false_if_unset";
            g.table = "setF2";
            g.family = Family::DenseReluDense;
            g.slots = {"i1", "i2"};
            g.params = {};
            g.tracked = {"i1", "i2", "v"};
            g.blocks = {
                ex({"1", "1/2"}, "0",
                   {{{"-1", "1", "1"}, {"-1", "1", "1"}}, {{"0", "1", "1"}, {"-1", "1/2", "1/2"}}, {{"1", "1", "1"}, {"-2", "-1/2", "-7/2"}}}),
                ex({"0", "-1"}, "-9/4",
                   {{{"-1", "1", "1"}, {"-1", "1", "1"}}, {{"-1", "1/2", "1/2"}, {"-1", "1/2", "1/2"}}, {{"-2", "-1/2", "-7/2"}, {"-2", "-4", "-4"}}}),
                ex({"0", "1"}, "5/4",
                   {{{"-1", "1", "1"}, {"-1", "3/2", "3/2"}}, {{"-1", "1/2", "1/2"}, {"-1", "3/2", "3/2"}}, {{"-2", "-4", "-4"}, {"-2", "-4", "-4"}}}),
                ex({"0", "-1"}, "-245/16",
                   {{{"-1", "3/2", "3/2"}, {"-1", "3/2", "3/2"}}, {{"-1", "3/2", "3/2"}, {"-1", "3/2", "3/2"}}, {{"-2", "-4", "-4"}, {"-2", "3/2", "3/2"}}}),
                ex({"0", "2/3"}, "5/4",
                   {{{"-1", "3/2", "3/2"}, {"-1", "1", "1"}}, {{"-1", "3/2", "3/2"}, {"-1", "1", "1"}}, {{"-2", "3/2", "3/2"}, {"-2", "1", "1"}}}),
                ex({"-1", "0"}, "3/4",
                   {{{"-1", "1", "1"}, {"-1/2", "1", "1/2"}}, {{"-1", "1", "1"}, {"-1/2", "1", "1/2"}}, {{"-2", "1", "1"}, {"1/2", "1", "-4"}}}),
                ex({"0", "1"}, "1",
                   {{{"-1/2", "1", "1/2"}, {"-1/2", "3/2", "3/2"}}, {{"-1/2", "1", "1/2"}, {"-1/2", "3/2", "3/2"}}, {{"1/2", "1", "-4"}, {"1/2", "-39", "6"}}}),
                ex({"0", "-1"}, "467/2",
                   {{{"-1/2", "3/2", "3/2"}, {"-1/2", "3/2", "3/2"}}, {{"-1/2", "3/2", "3/2"}, {"-1/2", "3/2", "3/2"}}, {{"1/2", "-39", "6"}, {"1/2", "-33", "-33"}}}),
                ex({"0", "-1"}, "47893/44",
                   {{{"-1/2", "3/2", "3/2"}, {"-1/2", "3/2", "3/2"}}, {{"-1/2", "3/2", "3/2"}, {"-1/2", "3/2", "3/2"}}, {{"1/2", "-33", "-33"}, {"1/2", "3/2", "3/2"}}}),
                ex({"0", "2/3"}, "5/4",
                   {{{"-1/2", "3/2", "3/2"}, {"-1/2", "1", "1"}}, {{"-1/2", "3/2", "3/2"}, {"-1/2", "1", "1"}}, {{"1/2", "3/2", "3/2"}, {"1/2", "1", "1"}}}),
                ex({"-1", "0"}, "3/4",
                   {{{"-1/2", "1", "1"}, {"-1", "1", "5/4"}}, {{"-1/2", "1", "1"}, {"-1", "1", "5/4"}}, {{"1/2", "1", "1"}, {"1/2", "1", "1"}}}),
                ex({"0", "1"}, "7/4",
                   {{{"-1", "1", "5/4"}, {"-1", "9/4", "9/4"}}, {{"-1", "1", "5/4"}, {"-1", "9/4", "9/4"}}, {{"1/2", "1", "1"}, {"1/2", "5/2", "5/2"}}}),
                ex({"0", "1"}, "263/16",
                   {{{"-1", "9/4", "9/4"}, {"-1", "855/16", "855/16"}}, {{"-1", "9/4", "9/4"}, {"-1", "855/16", "855/16"}}, {{"1/2", "5/2", "5/2"}, {"1/2", "855/16", "855/16"}}}),
                ex({"0", "16/855"}, "871/32",
                   {{{"-1", "855/16", "855/16"}, {"-1", "1", "1"}}, {{"-1", "855/16", "855/16"}, {"-1", "1", "1"}}, {{"1/2", "855/16", "855/16"}, {"1/2", "1", "1"}}}),
                ex({"1", "0"}, "3/4",
                   {{{"-1", "1", "1"}, {"-1", "1", "1"}}, {{"-1", "1", "1"}, {"-1", "1", "1"}}, {{"1/2", "1", "1"}, {"1", "1", "5/4"}}}),
                ex({"0", "1"}, "7/4",
                   {{{"-1", "1", "1"}, {"-1", "5/2", "5/2"}}, {{"-1", "1", "1"}, {"-1", "5/2", "5/2"}}, {{"1", "1", "5/4"}, {"1", "9/4", "9/4"}}}),
                ex({"0", "1"}, "263/16",
                   {{{"-1", "5/2", "5/2"}, {"-1", "855/16", "855/16"}}, {{"-1", "5/2", "5/2"}, {"-1", "855/16", "855/16"}}, {{"1", "9/4", "9/4"}, {"1", "855/16", "855/16"}}}),
                ex({"0", "16/855"}, "871/32",
                   {{{"-1", "855/16", "855/16"}, {"-1", "1", "1"}}, {{"-1", "855/16", "855/16"}, {"-1", "1", "1"}}, {{"1", "855/16", "855/16"}, {"1", "1", "1"}}}),
            };
            g.errata.push_back({"drd-setfalse-y9", W::Y, 8, 0, 0, "", "47893/44", "-47893/44",
                                 "sign dropped: (w_i2, v) = (-33, -33) -> (3/2, 3/2) needs gradient factor -23/22, i.e. y = -1089 + 23/44"});
            for (const auto& e : g.errata) erratum_cell(g, e) = e.corrected;
            c.push_back(std::move(g));
        }
        {
            GadgetSpec g;
            g.name = "copy_if_true";
            g.table = "setT2";
            g.family = Family::DenseReluDense;
            g.slots = {"i1", "i2", "i3"};
            g.params = {};
            g.tracked = {"i1", "i2", "i3", "v"};
            g.blocks = {
                ex({"1", "-2", "0"}, "3/4",
                   {{{"-1", "0", "1", "1"}, {"-1", "0", "1", "1"}}, {{"1", "0", "1", "1"}, {"1/2", "1", "1", "1/2"}}}),
                ex({"0", "0", "1"}, "1",
                   {{{"-1", "0", "1", "1"}, {"-1", "0", "1", "1"}}, {{"1/2", "1", "1", "1/2"}, {"1/2", "1", "3/2", "3/2"}}}),
                ex({"0", "0", "1"}, "17/4",
                   {{{"-1", "0", "1", "1"}, {"-1", "0", "15/2", "15/2"}}, {{"1/2", "1", "3/2", "3/2"}, {"1/2", "1", "15/2", "15/2"}}}),
                ex({"0", "0", "2/15"}, "17/4",
                   {{{"-1", "0", "15/2", "15/2"}, {"-1", "0", "1", "1"}}, {{"1/2", "1", "15/2", "15/2"}, {"1/2", "1", "1", "1"}}}),
                ex({"1", "0", "0"}, "3/4",
                   {{{"-1", "0", "1", "1"}, {"-1", "0", "1", "1"}}, {{"1/2", "1", "1", "1"}, {"1", "1", "1", "5/4"}}}),
                ex({"0", "0", "1"}, "7/4",
                   {{{"-1", "0", "1", "1"}, {"-1", "0", "5/2", "5/2"}}, {{"1", "1", "1", "5/4"}, {"1", "1", "9/4", "9/4"}}}),
                ex({"0", "0", "1"}, "263/16",
                   {{{"-1", "0", "5/2", "5/2"}, {"-1", "0", "855/16", "855/16"}}, {{"1", "1", "9/4", "9/4"}, {"1", "1", "855/16", "855/16"}}}),
                ex({"0", "0", "16/855"}, "871/32",
                   {{{"-1", "0", "855/16", "855/16"}, {"-1", "0", "1", "1"}}, {{"1", "1", "855/16", "855/16"}, {"1", "1", "1", "1"}}}),
            };
            for (const auto& e : g.errata) erratum_cell(g, e) = e.corrected;
            c.push_back(std::move(g));
        }
        return c;
    }();
    return cat;
}

} // namespace ogdforge

// Catalog source table.  One record per entry; line-oriented
// `key = value` format (see README for the grammar).  Exact rationals are
// `num/den`; eta specs are `eta 1^-8 4^8`; Hauptmodul-rational mirror maps
// list polynomial factors in h_N, ascending coefficients, ';'-separated.

namespace sc {

extern const char* const kCatalogText;
const char* const kCatalogText = R"CAT(
[hauptmodul]
h = 2 4096 | 2^24 1^-24
h = 3 729 | 3^12 1^-12
h = 4 256 | 4^8 1^-8
h = 5 125 | 5^6 1^-6
h = 6 72 | 2^1 6^5 3^-1 1^-5
h = 7 49 | 7^4 1^-4
h = 8 32 | 2^2 8^4 1^-4 4^-2
h = 9 27 | 9^3 1^-3
h = 10 20 | 2^1 10^3 1^-3 5^-1
h = 12 12 | 2^2 3^1 12^3 1^-3 4^-1 6^-2
h = 18 6 | 2^1 3^1 18^2 1^-2 6^-1 9^-1

[legendre]
name = hypergeometric F(1/2,1/2;1|16t)
order = 2
weight = 1
level = 4
group = Gamma0(4)
character = chi-4
sequence = legendre
r = 1
status = proven
theta_form = modular
functional = plain 2
t = eta 1^8 2^-24 4^16
t_alt = hrat 4 | 0 1 | 1 16
theta = eta 1^-4 2^10 4^-4
tt = 1 2 1 | 2^-4 4^8
ode = 1 -16 | 0 -16 | 0 -4
pole = 1/2
cusp = t0=1/16 eps=chi-4 tau=0
cm = label=vanhamme alpha=1,1,2 D=1 t0=-1/16 branch pmod=4 pres=1 repD=1 repe=1 e=1 chiw=1 c=0,2 d=1,-1
cm = label=half_i alpha=0,1,2 D=1 t0=1/32 branch pmod=4 pres=1 repD=1 repe=1 e=1 chiw=1 c=0,2 d=1,0
cm = label=quarter alpha=1,1,4 D=1 t0=1/8 branch pmod=4 pres=1 repD=1 repe=1 e=1 chiw=1 c=0,4 d=1,-1
note = quadratic CM values: t(i)=(1-sqrt2)^4/16, t((2+i)/5)=(1+sqrt2)^4/16, t(sqrt(-2)/2)=(1-sqrt2)^2/16, t((2+sqrt(-2))/6)=(1+sqrt2)^2/16

[hyper_third]
name = hypergeometric F(1/3,2/3;1|27t)
order = 2
weight = 1
level = 3
group = Gamma0(3)
character = chi-3
sequence = hyper_third
r = 1/3
status = proven
theta_form = modular
functional = plain 2
t = hrat 3 | 0 1 | 1 27
theta = chieis 3 6
tt = 1 3 1 | 1^-3 3^9
ode = 1 -27 | 0 -27 | 0 -6
pole = (3+sqrt(-3))/6
cusp = t0=1/27 eps=chi-3 tau=0
cm = label=v54 alpha=0,1,3 D=3 t0=1/54
cm = label=v216 alpha=1,1,2 D=3 t0=-1/216
cm = label=v24 alpha=-1,1,6 D=3 t0=1/24

[hyper_quarter_w1]
name = hypergeometric F(1/4,3/4;1|64t)
order = 2
weight = 1
level = 2
group = Gamma0(2)
character = trivial
sequence = hyper_quarter_w1
r = 1/4
status = experimental
theta_form = squared
functional = experimental 2
t = hrat 2 | 0 1 | 1 64
theta = e2n 2:-1
ode = 1 -64 | 0 -64 | 0 -12
pole = (1+i)/2
cm = label=v4032 alpha=1,1,2 D=7 t0=-1/4032
cm = label=v63 alpha=-1,1,8 D=7 t0=1/63
cm = label=v576 alpha=0,1,1 D=1 t0=1/576
cm = label=v72 alpha=0,1,2 D=1 t0=1/72
cm = label=v128 alpha=0,1,2 D=2 t0=1/128
cm = label=v192 alpha=1,1,2 D=3 t0=-1/192
cm = label=v48 alpha=-1,1,4 D=3 t0=1/48

[hyper_sixth_w1]
name = hypergeometric F(1/6,5/6;1|864t)
order = 2
weight = 1
level = 1
group = none
character = trivial
sequence = hyper_sixth_w1
r = 1
status = experimental
theta_form = none
functional = none
ode = 1 -864 | 0 -864 | 0 -120
note = t is not modular; Theta^4 = E4

[zagier_a]
name = Zagier A (Franel numbers)
order = 2
weight = 1
level = 6
group = Gamma0(6)
character = chi-3
sequence = zagier_a
r = 1
status = proven
theta_form = modular
functional = plain 2
ct = yes
t = eta 1^3 6^9 2^-3 3^-9
t_alt = hrat 6 | 0 1 | 1 8
theta = eta 2^1 3^6 1^-2 6^-3
ode = 1 -7 -8 | 0 -7 -16 | 0 -2 -8
cusp = t0=1/8 eps=chi-3 tau=0
cusp = t0=-1 eps=chi-3 tau=1/2
cm = label=m14 alpha=3,1,6 D=3 t0=-1/4
cm = label=v12 alpha=3,1,12 D=3 t0=1/2

[zagier_b]
name = Zagier B (twisted)
order = 2
weight = 1
level = 9
group = Gamma0(9)
character = chi-3
sequence = zagier_b
r = 1
status = proven
theta_form = modular
functional = plain 2
t = eta 9^3 1^-3
t_alt = hrat 9 | 0 1 | 1
theta = eta 1^3 3^-1
ode = 1 9 27 | 0 9 54 | 0 3 27
cm = label=v19 alpha=3,1,6 D=3 t0=1/9
cm = label=v13 alpha=3,1,18 D=3 t0=1/3

[zagier_c]
name = Zagier C
order = 2
weight = 1
level = 6
group = Gamma0(6)
character = chi-3
sequence = zagier_c
r = 1
status = proven
theta_form = modular
functional = plain 2
t = eta 1^4 6^8 2^-8 3^-4
t_alt = hrat 6 | 0 1 | 1 9
theta = eta 3^1 2^6 1^-3 6^-2
ode = 1 -10 9 | 0 -10 18 | 0 -3 9
cusp = t0=1/9 eps=chi-3 tau=0
cusp = t0=1 eps=one tau=1/3
cm = label=m13 alpha=3,1,6 D=3 t0=-1/3
cm = label=v13 alpha=3,1,12 D=3 t0=1/3

[zagier_d]
name = Zagier D (Apery numbers for zeta(2))
order = 2
weight = 1
level = 5
group = Gamma1(5)
character = zagier-d
sequence = zagier_d
r = 1
status = experimental
theta_form = modular
functional = experimental 2
ct = yes
t = etaleg 5 5
theta = zdtheta
tt = 1 2 1 | 1^-1 5^5
ode = 1 -11 -1 | 0 -11 -2 | 0 -3 -1

[zagier_e]
name = Zagier E
order = 2
weight = 1
level = 8
group = Gamma0(8)
character = chi-4
sequence = zagier_e
r = 1
status = proven
theta_form = modular
functional = plain 2
t = eta 1^4 4^2 8^4 2^-10
t_alt = hrat 8 | 0 1 | 1 8
theta = eta 2^10 1^-4 4^-4
ode = 1 -12 32 | 0 -12 64 | 0 -4 32
cusp = t0=1/8 eps=chi-4 tau=0
cusp = t0=1/4 eps=one tau=1/4

[zagier_f]
name = Zagier F (twisted)
order = 2
weight = 1
level = 6
group = Gamma0(6)
character = chi-3
sequence = zagier_f
r = 1
status = proven
theta_form = modular
functional = plain 2
t = eta 6^5 2^1 1^-5 3^-1
t_alt = hrat 6 | 0 1 | 1
theta = eta 1^6 6^1 2^-3 3^-2
ode = 1 17 72 | 0 17 144 | 0 6 72
cusp = t0=-1/9 eps=chi-3 tau=1/2
cusp = t0=-1/8 eps=one tau=1/3
cm = label=m112 alpha=3,1,6 D=3 t0=-1/12 branch pmod=3 pres=1 repD=3 repe=1 e=1 chiw=1 c=0,6 d=1,-3
cm = label=m16 alpha=3,1,12 D=3 t0=-1/6 branch pmod=3 pres=1 repD=3 repe=1 e=1 chiw=1 c=0,12 d=1,-3

[hyper_half_cubed]
name = hypergeometric F(1/2,1/2,1/2;1,1|64t)
order = 3
weight = 2
level = 4
group = Gamma0(4)+<4>
character = trivial
sequence = hyper_half_cubed
r = 1
status = proven
theta_form = modular
functional = plain 3
t = eta 1^24 4^24 2^-48
t_alt = hrat 4 | 0 1 | 1 16 ; 1 16
theta = eta 2^20 1^-8 4^-8
tt = 1 2 1 | 1^8 2^-8 4^8
ode = 1 -64 | 0 -96 | 0 -48 | 0 -8
pole = 1/2
cm = label=lr64 alpha=0,1,2 D=1 t0=1/64 branch pmod=4 pres=1 repD=1 repe=1 e=1 chiw=1 c=0,2 d=1,0
cm = label=lr512 alpha=1,2,2 D=1 t0=-1/512 branch pmod=8 pres=1 repD=1 repe=1 e=1 chiw=1 c=0,1 d=1,-1/2 branch pmod=8 pres=5 repD=1 repe=1 e=4 chiw=-1 c=0,2 d=2,-1
cm = label=vh64 alpha=1,1,2 D=2 t0=-1/64 delta=-1/4 branch pmod=8 pres=1 repD=2 repe=1 e=1 chiw=1 c=0,2 d=1,-1 branch pmod=8 pres=3 repD=2 repe=1 e=4 chiw=-1 c=0,4 d=2,-2
cm = label=v256 alpha=0,1,2 D=3 t0=1/256
cm = label=v16 alpha=1,1,4 D=3 t0=1/16
cm = label=m12 alpha=1,1,2 D=1 t0=-1/2
cm = label=v1 alpha=3,1,8 D=7 t0=1
cm = label=v4096 alpha=0,1,2 D=7 t0=1/4096

[hyper_quarter3]
name = hypergeometric F(1/4,1/2,3/4;1,1|256t)
order = 3
weight = 2
level = 2
group = Gamma0(2)+<2>
character = trivial
sequence = hyper_quarter3
r = 1/4
status = proven
theta_form = modular
functional = plain 3
t = hrat 2 | 0 1 | 1 64 ; 1 64
theta = e2n 2:-1
tt = 1 4 1 | 1^8 2^8
ode = 1 -256 | 0 -384 | 0 -176 | 0 -24
pole = (1+i)/2
cm = label=m1_1024 alpha=1,1,2 D=5 t0=-1/1024 delta=-3/20 branch pmod=20 pres=1|9 repD=5 repe=1 e=1 chiw=1 c=0,2 d=1,-1 branch pmod=20 pres=3|7 repD=5 repe=2 e=2 chiw=-1 c=0,2 d=1,-1
cm = label=v256 alpha=0,1,2 D=2 t0=1/256
cm = label=v2304 alpha=0,1,2 D=6 t0=1/2304
cm = label=m144 alpha=1,1,2 D=3 t0=-1/144
cm = label=m17088 alpha=1,3,2 D=1 t0=-1/17088
cm = label=v648 alpha=0,1,1 D=1 t0=1/648
cm = label=v20736 alpha=0,1,2 D=10 t0=1/20736
cm = label=v81 alpha=1,1,4 D=7 t0=1/81
cm = label=m82944 alpha=1,1,2 D=13 t0=-1/82944
cm = label=m3969 alpha=1,1,2 D=7 t0=-1/3969
cm = label=v614656 alpha=0,3,2 D=2 t0=1/614656
cm = label=v9801 alpha=0,1,2 D=22 t0=1/9801
cm = label=m6635520 alpha=1,5,2 D=1 t0=-1/6635520
cm = label=m199148544 alpha=1,1,2 D=37 t0=-1/199148544
cm = label=v24591257856 alpha=0,1,2 D=58 t0=1/24591257856

[hyper_third3]
name = hypergeometric F(1/3,1/2,2/3;1,1|108t)
order = 3
weight = 2
level = 3
group = Gamma0(3)+<3>
character = trivial
sequence = hyper_third3
r = 1/3
status = proven
theta_form = modular
functional = extended 3
t = hrat 3 | 0 1 | 1 27 ; 1 27
theta = e2n 3:-1/2
tt = 1 3 1 | 1^6 3^6
ode = 1 -108 | 0 -162 | 0 -78 | 0 -12
pole = (3+sqrt(-3))/6
cm = label=v108 alpha=0,1,3 D=3 t0=1/108
cm = label=m27 alpha=3,1,6 D=15 t0=-1/27
cm = label=v216 alpha=0,1,3 D=6 t0=1/216
cm = label=v8 alpha=1,1,3 D=2 t0=1/8
cm = label=m1728 alpha=3,1,6 D=51 t0=-1/1728
cm = label=m192 alpha=1,1,2 D=3 t0=-1/192
cm = label=v1024 alpha=1,1,6 D=11 t0=1/1024
cm = label=m8640 alpha=3,5,6 D=3 t0=-1/8640
cm = label=v3375 alpha=0,1,3 D=15 t0=1/3375
cm = label=m110592 alpha=3,1,6 D=123 t0=-1/110592
cm = label=m326592 alpha=3,7,6 D=3 t0=-1/326592

[hyper_sixth3]
name = hypergeometric F(1/6,1/2,5/6;1,1|1728t)
order = 3
weight = 2
level = 1
group = Gamma0(1)
character = trivial
sequence = hyper_sixth3
r = 1/3
status = proven
theta_form = squared
functional = squared 3
t = invj
theta = e4
tt = 1 6 1 | 1^24
ode = 1 -1728 | 0 -2592 | 0 -1104 | 0 -120
pole = (1+sqrt(-3))/2
rvh = D=4 J=1728 delta=0
rvh = D=7 J=-3375 delta=-8/63
rvh = D=8 J=8000 delta=-3/28
rvh = D=11 J=-32768 delta=-15/154
rvh = D=19 J=-884736 delta=-25/342
rvh = D=43 J=-884736000 delta=-263/5418
rvh = D=67 J=-147197952000 delta=-10177/261702
rvh = D=163 J=-262537412640768000 delta=-13591409/545140134

[apery3]
name = Apery numbers for zeta(3), Almkvist gamma
order = 3
weight = 2
level = 6
group = Gamma0(6)+<6>
character = trivial
sequence = apery3
r = 1
status = proven
theta_form = modular
functional = plain 3
ct = yes
t = eta 1^12 6^12 2^-12 3^-12
t_alt = hrat 6 | 0 1 | 1 8 ; 1 9
theta = eta 2^7 3^7 1^-5 6^-5
ode = 1 -34 1 | 0 -51 3 | 0 -27 3 | 0 -5 1
pole = 1/2
cm = label=t1 alpha=2,1,6 D=2 t0=1 delta=-1/2 branch pmod=8 pres=1|3 repD=2 repe=1 e=1 chiw=1 c=0,6 d=1,-2
cm = label=m1 alpha=3,1,6 D=3 t0=-1 branch pmod=3 pres=1 repD=3 repe=1 e=1 chiw=1 c=0,6 d=1,-3

[almkvist_eta]
name = Almkvist (eta), twisted
order = 3
weight = 2
level = 5
group = Gamma0(5)
character = chi5
sequence = almkvist_eta
r = 1
status = proven
theta_form = modular
functional = plain 3
t = eta 5^6 1^-6
theta = eta 1^5 5^-1
ode = 1 22 125 | 0 33 375 | 0 21 375 | 0 5 125
note = no rational CM-values found

[domb]
name = Domb, Almkvist (alpha), twisted
order = 3
weight = 2
level = 6
group = Gamma0(6)+<3>
character = trivial
sequence = domb
r = 1
status = proven
theta_form = modular
functional = plain 3
t = eta 2^6 6^6 1^-6 3^-6
t_alt = hrat 6 | 0 1 ; 1 9 | 1 8
theta = eta 1^4 3^4 2^-2 6^-2
ode = 1 20 64 | 0 30 192 | 0 18 192 | 0 4 64
cm = label=v1 alpha=9,1,24 D=15 t0=1
cm = label=m12 alpha=3,1,6 D=3 t0=-1/2
cm = label=v14 alpha=3,1,12 D=3 t0=1/4
cm = label=v18 alpha=1,1,6 D=2 t0=1/8
cm = label=m18 alpha=3,1,6 D=6 t0=-1/8
cm = label=v116 alpha=0,1,6 D=3 t0=1/16
cm = label=m132 alpha=3,2,6 D=3 t0=-1/32
cm = label=v164 alpha=0,1,30 D=15 t0=1/64

[almkvist_zudilin]
name = Almkvist-Zudilin, Almkvist (delta), twisted
order = 3
weight = 2
level = 6
group = Gamma0(6)+<2>
character = trivial
sequence = almkvist_zudilin
r = 1
status = proven
theta_form = modular
functional = plain 3
t = eta 3^4 6^4 1^-4 2^-4
t_alt = hrat 6 | 0 1 ; 1 8 | 1 9
theta = eta 1^3 2^3 3^-1 6^-1
ode = 1 14 81 | 0 21 243 | 0 13 243 | 0 3 81
cm = label=m1 alpha=3,1,6 D=2 t0=-1
cm = label=v13 alpha=2,1,6 D=1 t0=1/3
cm = label=v19 alpha=3,1,12 D=3 t0=1/9
cm = label=m19 alpha=3,1,6 D=6 t0=-1/9
cm = label=v127 alpha=0,1,2 D=1 t0=1/27
cm = label=m181 alpha=1,1,2 D=2 t0=-1/81

[almkvist_epsilon]
name = Almkvist (epsilon)
order = 3
weight = 2
level = 8
group = Gamma0(8)+<8>
character = trivial
sequence = almkvist_epsilon
r = 1
status = proven
theta_form = modular
functional = plain 3
t = eta 1^8 8^8 2^-8 4^-8
t_alt = hrat 8 | 0 1 | 1 4 ; 1 8
theta = eta 2^6 4^6 1^-4 8^-4
ode = 1 -24 16 | 0 -36 48 | 0 -20 48 | 0 -4 16
pole = 1/2
cm = label=v1 alpha=5,1,16 D=7 t0=1
cm = label=m14 alpha=2,1,4 D=2 t0=-1/4
cm = label=v14 alpha=1,1,4 D=1 t0=1/4
cm = label=v116 alpha=1,1,8 D=7 t0=1/16

[almkvist_zeta]
name = Almkvist (zeta)
order = 3
weight = 2
level = 9
group = Gamma0(9)+<9>
character = trivial
sequence = almkvist_zeta
r = 1
status = proven
theta_form = modular
functional = plain 3
t = eta 1^6 9^6 3^-12
t_alt = hrat 9 | 0 1 | 1 9 27
theta = eta 3^10 1^-3 9^-3
ode = 1 -18 -27 | 0 -27 -81 | 0 -15 -81 | 0 -3 -27
pole = 1/3
cm = label=v1 alpha=5,1,18 D=11 t0=1
cm = label=m1 alpha=4,1,9 D=2 t0=-1
cm = label=m13 alpha=3,1,6 D=3 t0=-1/3
cm = label=v19 alpha=1,1,6 D=3 t0=1/9
cm = label=v127 alpha=0,1,3 D=2 t0=1/27
cm = label=m127 alpha=3,1,6 D=11 t0=-1/27

[cooper_s7]
name = Cooper s7
order = 3
weight = 2
level = 7
group = Gamma0(7)+<7>
character = trivial
sequence = cooper_s7
r = 1
status = experimental
theta_form = modular
functional = plain 2
t = hrat 7 | 0 1 | 1 13 49
theta = theta7sq
tt = 2 3 1 | 1^6 7^6
ode = 1 -26 -27 | 0 -39 -81 | 0 -21 -78 | 0 -4 -24
pole = (5+sqrt(-3))/14
cm = label=m1 alpha=7,1,14 D=7 t0=-1
cm = label=v12 alpha=2,1,7 D=3 t0=1/2
cm = label=v18 alpha=3,1,14 D=19 t0=1/8
cm = label=m18 alpha=7,1,14 D=35 t0=-1/8
cm = label=v124 alpha=1,3,14 D=3 t0=1/24
cm = label=v127 alpha=0,1,7 D=7 t0=1/27
cm = label=m164 alpha=7,1,14 D=91 t0=-1/64
cm = label=v1125 alpha=0,2,7 D=7 t0=1/125
cm = label=m110648 alpha=7,1,14 D=427 t0=-1/10648

[cooper_s10]
name = Yang-Zudilin, Cooper s10
order = 3
weight = 2
level = 10
group = Gamma0(10)+<2,5>
character = trivial
sequence = cooper_s10
r = 1
status = experimental
theta_form = modular
functional = plain 2
t = hrat 10 | 0 1 ; 1 4 ; 1 5 | 1 8 20 ; 1 8 20
theta = e2n 2:1/12 5:-1/12 10:-1/12
tt = 3 4 1 | 1^4 2^4 5^4 10^4
ode = 1 -12 -64 | 0 -18 -192 | 0 -10 -188 | 0 -2 -60
cm = label=v1 alpha=5,1,20 D=15 t0=1
cm = label=m12 alpha=2,1,5 D=1 t0=-1/2
cm = label=v14 alpha=2,1,10 D=6 t0=1/4
cm = label=m14 alpha=5,1,10 D=5 t0=-1/4
cm = label=m19 alpha=5,1,10 D=15 t0=-1/9
cm = label=v112 alpha=1,3,10 D=1 t0=1/12
cm = label=v116 alpha=0,1,10 D=10 t0=1/16
cm = label=m120 alpha=1,1,2 D=1 t0=-1/20
cm = label=v136 alpha=0,1,10 D=30 t0=1/36
cm = label=m164 alpha=5,3,10 D=5 t0=-1/64
cm = label=v1196 alpha=0,1,10 D=70 t0=1/196
cm = label=m1324 alpha=5,1,10 D=85 t0=-1/324
cm = label=v11296 alpha=0,1,10 D=130 t0=1/1296
cm = label=v15776 alpha=0,1,10 D=190 t0=1/5776

[cooper_s18]
name = Cooper s18
order = 3
weight = 2
level = 18
group = Gamma0(18)+<2,9,w>
character = trivial
sequence = cooper_s18
r = 1
status = experimental
theta_form = modular
functional = plain 2
t = hrat 18 | 0 1 ; 1 2 ; 1 3 ; 1 3 3 ; 1 6 12 | 1 6 6 ; 1 6 6 ; 1 6 6 ; 1 6 6
theta = e2n 2:-1/4 3:-1/2 6:1/2 9:1/4 18:-1/4
tt = 3 4 1 | 3^8 6^8
ode = 1 -28 192 | 0 -42 576 | 0 -26 564 | 0 -6 180
cm = label=m14 alpha=3,1,6 D=5 t0=-1/4
cm = label=v19 alpha=3,1,12 D=7 t0=1/9
cm = label=m19 alpha=3,1,6 D=7 t0=-1/9
cm = label=v112 alpha=1,1,6 D=1 t0=1/12
cm = label=v116 alpha=0,1,6 D=2 t0=1/16
cm = label=v118 alpha=0,1,3 D=1 t0=1/18
cm = label=v136 alpha=0,1,6 D=10 t0=1/36
cm = label=m136 alpha=3,1,6 D=13 t0=-1/36
cm = label=v1144 alpha=0,1,6 D=22 t0=1/144
cm = label=m1180 alpha=3,5,6 D=1 t0=-1/180
cm = label=m1576 alpha=3,1,6 D=37 t0=-1/576

[apery2_central]
name = Apery2 Hadamard central
order = 3
weight = 2
level = 5
group = Gamma0(5)+<5>
character = trivial
sequence = apery2_central
r = 1
status = experimental
theta_form = modular
functional = plain 2
t = hrat 5 | 0 1 | 1 22 125
theta = e2n 5:-1/4
tt = 1 2 1 | 1^4 5^4
ode = 1 -44 -16 | 0 -66 -48 | 0 -34 -44 | 0 -6 -12
pole = (2+i)/5
cm = label=v14 alpha=3,1,10 D=11 t0=1/4
cm = label=m13 alpha=5,1,10 D=15 t0=-1/3
cm = label=m128 alpha=5,1,10 D=35 t0=-1/28
cm = label=v136 alpha=1,1,10 D=19 t0=1/36
cm = label=v118 alpha=-1,2,5 D=1 t0=1/18
cm = label=v172 alpha=0,1,5 D=10 t0=1/72
cm = label=v1588 alpha=0,1,5 D=15 t0=1/588
cm = label=m1828 alpha=5,1,10 D=115 t0=-1/828
cm = label=m115228 alpha=5,1,10 D=235 t0=-1/15228

[franel_central]
name = Franel Hadamard central
order = 3
weight = 2
level = 6
group = Gamma0(6)+<2,3>
character = trivial
sequence = franel_central
r = 1
status = experimental
theta_form = modular
functional = plain 2
t = hrat 6 | 0 1 17 72 | 1 16 72 ; 1 16 72
theta = etacombo 1 | 2^7 3^7 1^-5 6^-5 ; -1 | 1^7 6^7 2^-5 3^-5
tt = 1 2 1 | 1^2 2^2 3^2 6^2
ode = 1 -28 -128 | 0 -42 -384 | 0 -22 -352 | 0 -4 -96
cm = label=m14 alpha=3,1,6 D=3 t0=-1/4
cm = label=v116 alpha=1,1,6 D=5 t0=1/16
cm = label=m116 alpha=1,1,2 D=1 t0=-1/16
cm = label=v15 alpha=3,1,12 D=15 t0=1/5
cm = label=v132 alpha=0,1,6 D=6 t0=1/32
cm = label=v196 alpha=0,1,2 D=2 t0=1/96
cm = label=v150 alpha=0,1,3 D=3 t0=1/50
cm = label=m1116 alpha=3,1,6 D=21 t0=-1/116
cm = label=m149 alpha=3,1,6 D=15 t0=-1/49
cm = label=v1320 alpha=0,1,6 D=30 t0=1/320
cm = label=m1400 alpha=3,1,6 D=33 t0=-1/400
cm = label=v1896 alpha=0,1,6 D=42 t0=1/896
cm = label=m12704 alpha=3,1,6 D=57 t0=-1/2704
cm = label=v110400 alpha=0,1,6 D=78 t0=1/10400
cm = label=v139200 alpha=0,1,6 D=102 t0=1/39200

[central]
name = central binomial coefficients (n=1)
order = 1
weight = 1
level = 1
group = none
character = trivial
sequence = central
r = 1
status = proven
theta_form = rational
functional = plain 2
t = qrat | 0 1 | 1 2 1
theta = qrat | 1 1 | 1 -1
ode = 1 -4 | 0 -6 | 0 -2
)CAT";

}  // namespace sc

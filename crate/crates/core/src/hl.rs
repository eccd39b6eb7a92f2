pub struct HlSpec<C>(std::marker::PhantomData<C>);
